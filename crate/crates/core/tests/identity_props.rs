use homjmp::algebra::{admissible_pair, jmp_to_admissible, minus_algebra, plus_algebra};
use homjmp::constructions::{yau_twist, Requirement};
use homjmp::fixtures;
use homjmp::identity::checks::{
    check_admissible_jmp, check_flexible_characterization, check_hom_flexible, check_hom_leibniz,
    check_multilinear, identities,
};
use homjmp::linalg::{int, ratio};
use homjmp::random::{self, GenericStructure};
use homjmp::{HomAlgebra, HomJMPAlgebra, Matrix, Scalar, Tensor3, Vector, Verdict};
use num_traits::Zero;
use proptest::prelude::*;

fn omul(t: &Tensor3, u: &[Scalar], v: &[Scalar]) -> Vector {
    let n = t.dim();
    let mut out = vec![Scalar::zero(); n];
    for i in 0..n {
        for j in 0..n {
            let c = &u[i] * &v[j];
            if c.is_zero() {
                continue;
            }
            for (k, o) in out.iter_mut().enumerate() {
                *o += &c * t.get(i, j, k);
            }
        }
    }
    out
}

fn oapply(m: &Matrix, v: &[Scalar]) -> Vector {
    (0..m.rows())
        .map(|i| (0..m.cols()).fold(Scalar::zero(), |acc, j| acc + m.get(i, j) * &v[j]))
        .collect()
}

fn e(n: usize, i: usize) -> Vector {
    (0..n).map(|k| if k == i { int(1) } else { int(0) }).collect()
}

/// `(xy)a(z) - a(x)(yz) + (zy)a(x) - a(z)(yx)` on every basis triple.
fn oracle_flexible(a: &HomAlgebra) -> bool {
    let (t, m) = (a.mul(), a.twist_matrix());
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (e(n, i), e(n, j), e(n, k));
                let as_xyz: Vector = omul(t, &omul(t, &x, &y), &oapply(m, &z))
                    .into_iter()
                    .zip(omul(t, &oapply(m, &x), &omul(t, &y, &z)))
                    .map(|(p, q)| p - q)
                    .collect();
                let as_zyx: Vector = omul(t, &omul(t, &z, &y), &oapply(m, &x))
                    .into_iter()
                    .zip(omul(t, &oapply(m, &z), &omul(t, &y, &x)))
                    .map(|(p, q)| p - q)
                    .collect();
                if as_xyz.iter().zip(&as_zyx).any(|(p, q)| !(p + q).is_zero()) {
                    return false;
                }
            }
        }
    }
    true
}

fn factorial(d: u32) -> Scalar {
    int((1..=d as i64).product())
}

/// A mix of flexible and non-flexible algebras: commutative, anticommutative,
/// generic, and twists of the 3-dimensional table.
fn fuzzed_algebra(seed: u64) -> HomAlgebra {
    let mut rng = random::rng(seed);
    let n = 2 + (seed % 2) as usize;
    let twist = random::matrix(&mut rng, n);
    match seed % 5 {
        0 => HomAlgebra::new(random::symmetric_tensor(&mut rng, n), twist).unwrap(),
        1 => HomAlgebra::new(random::skew_tensor(&mut rng, n), twist).unwrap(),
        2 => HomAlgebra::new(random::tensor(&mut rng, n), twist).unwrap(),
        3 => {
            let sym = random::symmetric_tensor(&mut rng, n);
            let skew = random::skew_tensor(&mut rng, n);
            HomAlgebra::new(sym.add(&skew).unwrap(), Matrix::identity(n)).unwrap()
        }
        _ => fixtures::ex3(&random::nonzero_int(&mut rng)).unwrap(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn admissible_pair_round_trips(seed in any::<u64>(), n in 1usize..=4) {
        let mut rng = random::rng(seed);
        let a = HomAlgebra::new(random::tensor(&mut rng, n), random::matrix(&mut rng, n)).unwrap();
        let pair = admissible_pair(&a);
        prop_assert!(pair.bracket().is_skew());
        prop_assert!(pair.jordan().is_symmetric());
        prop_assert_eq!(jmp_to_admissible(&pair), a.clone());
        prop_assert_eq!(pair.bracket(), &minus_algebra(&a).mul().clone());
        prop_assert_eq!(pair.jordan(), &plus_algebra(&a).mul().clone());
    }

    #[test]
    fn polarization_restores_the_source(seed in any::<u64>(), n in 2usize..=3) {
        let mut rng = random::rng(seed);
        let s = GenericStructure::new(&mut rng, n);
        let x = random::vector(&mut rng, n);
        let y = random::vector(&mut rng, n);
        let z = random::vector(&mut rng, n);
        for (m, d) in identities().polarized() {
            let arity = m.source().arity().unwrap();
            let rest = [y.clone(), z.clone()];
            let mut inputs = vec![x.clone(); d as usize];
            inputs.extend(rest[..arity - 1].iter().cloned());
            let mut direct = vec![x.clone()];
            direct.extend(rest[..arity - 1].iter().cloned());
            let lhs = m.eval(&s, &inputs);
            let rhs: Vector = m.source().eval(&s, &direct).iter().map(|c| c * factorial(d)).collect();
            prop_assert_eq!(lhs, rhs, "{}", m.name());
        }
    }

    #[test]
    fn polarized_identities_are_symmetric_in_copies(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let s = GenericStructure::new(&mut rng, 2);
        for (m, d) in identities().polarized() {
            let inputs: Vec<Vector> = (0..m.arity()).map(|_| random::vector(&mut rng, 2)).collect();
            let mut swapped = inputs.clone();
            swapped.swap(0, d as usize - 1);
            prop_assert_eq!(m.eval(&s, &inputs), m.eval(&s, &swapped), "{}", m.name());
        }
    }

    #[test]
    fn flexible_matches_oracle_and_characterization(seed in any::<u64>()) {
        let a = fuzzed_algebra(seed);
        let flexible = check_hom_flexible(&a);
        prop_assert_eq!(flexible.passed(), oracle_flexible(&a));
        let ch = check_flexible_characterization(&a);
        prop_assert_eq!(ch.verdict, flexible.verdict);
        prop_assert!(ch.cross_checks_hold());
    }

    #[test]
    fn leibniz_forms_agree_for_skew_brackets(seed in any::<u64>(), n in 2usize..=3) {
        let mut rng = random::rng(seed);
        let j = HomJMPAlgebra::new(
            random::skew_tensor(&mut rng, n),
            random::symmetric_tensor(&mut rng, n),
            random::matrix(&mut rng, n),
        ).unwrap();
        prop_assert!(check_hom_leibniz(&j).cross_checks_hold());
    }

    #[test]
    fn twisting_by_the_twist_stays_admissible(p in 1i64..=9, q in 1i64..=9, sign in any::<bool>(), k in 1u32..=3) {
        let lam = if sign { ratio(p, q) } else { ratio(-p, q) };
        let a = fixtures::ex3(&lam).unwrap();
        let beta = a.twist_matrix().pow(k).unwrap();
        let t = yau_twist(&a, &beta, Requirement::Full).unwrap();
        let r = check_admissible_jmp(&t);
        prop_assert!(r.passed());
        prop_assert!(r.cross_checks_hold());
    }

    #[test]
    fn basis_verdicts_survive_sampling(seed in any::<u64>()) {
        let a = fuzzed_algebra(seed);
        let mut rng = random::rng(seed ^ 0xabcd);
        for (m, _) in identities().polarized() {
            let verdict = check_multilinear(m, &a).verdict;
            let arity = m.source().arity().unwrap();
            let hit = (0..40).any(|_| {
                let vars: Vec<Vector> = (0..arity).map(|_| random::vector(&mut rng, a.dim())).collect();
                m.source().eval(&a, &vars).iter().any(|c| !c.is_zero())
            });
            prop_assert_eq!(verdict == Verdict::Fail, hit, "{}", m.name());
        }
    }
}

#[test]
fn first_witness_is_lexicographic() {
    let a = fixtures::ex3(&int(2)).unwrap();
    let r = check_multilinear(&identities().left_alternative, &a);
    let w = r.witness.expect("ex3 is not left alternative");
    let basis = w.basis.unwrap();
    let n = a.dim();
    let first = (0..n * n * n)
        .map(|c| vec![c / (n * n), (c / n) % n, c % n])
        .find(|t| {
            let v: Vec<Vector> = t.iter().map(|&i| e(n, i)).collect();
            identities().left_alternative.eval(&a, &v).iter().any(|c| !c.is_zero())
        })
        .unwrap();
    assert_eq!(basis, first);
}
