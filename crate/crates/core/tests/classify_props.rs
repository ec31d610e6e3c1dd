use proptest::prelude::*;
use qflag_core::classify::{canonicalize, g_lambda_mu, subgroup_equal, CanonicalSubgroup, ExactLog, Generator, Kernel};
use qflag_core::Rational;

fn lg(n: i64, d: i64) -> ExactLog {
    ExactLog::of(Rational::new(n, d)).unwrap()
}

/// Generators reconstructing a closed subgroup from its canonical form.
fn regenerate(c: &CanonicalSubgroup) -> Vec<Generator> {
    let mut out = Vec::new();
    if let Kernel::Cyclic(g) = &c.kernel {
        out.push((g.clone(), 0));
    }
    if let Some(x) = &c.coset {
        out.push((x.clone(), c.step as i64));
    }
    out
}

fn arb_log() -> impl Strategy<Value = ExactLog> {
    (1i64..=30, 1i64..=30, -2i64..=2, 1i64..=2)
        .prop_filter("base not 1", |(n, d, e, _)| n != d && *e != 0)
        .prop_map(|(n, d, e, f)| ExactLog::new(Rational::new(n, d), Rational::new(e, f)).unwrap())
}

fn arb_generators() -> impl Strategy<Value = Vec<Generator>> {
    prop::collection::vec((arb_log(), -3i64..=3), 1..5)
}

proptest! {
    #[test]
    fn canonical_form_is_idempotent(gens in arb_generators()) {
        let c = canonicalize(&gens);
        prop_assume!(c.kernel != Kernel::DenseLine);
        prop_assert_eq!(canonicalize(&regenerate(&c)), c);
    }

    #[test]
    fn generator_order_is_irrelevant(gens in arb_generators(), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut shuffled = gens.clone();
        shuffled.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
        prop_assert_eq!(canonicalize(&gens), canonicalize(&shuffled));
    }

    #[test]
    fn adding_a_member_changes_nothing(gens in arb_generators(), a in -2i64..=2, b in -2i64..=2) {
        // a g_0 + b g_last lies in the group already
        let (x0, n0) = gens[0].clone();
        let (x1, n1) = gens[gens.len() - 1].clone();
        let member = (x0.scale(Rational::from_integer(a)).add(&x1.scale(Rational::from_integer(b))), a * n0 + b * n1);
        let mut more = gens.clone();
        more.push(member);
        prop_assert!(subgroup_equal(&canonicalize(&gens), &canonicalize(&more)));
    }

    #[test]
    fn lambda_powers_shift_mu(ln in 1i64..=9, ld in 10i64..=20, mn in 1i64..=30, md in 1i64..=30) {
        let lambda = lg(ln, ld);
        let mu = lg(mn, md);
        let base = canonicalize(&g_lambda_mu(&lambda, &mu));
        for k in -2i64..=2 {
            let shifted = mu.add(&lambda.scale(Rational::from_integer(k)));
            prop_assert_eq!(&canonicalize(&g_lambda_mu(&lambda, &shifted)), &base);
        }
        prop_assert_eq!(base.step, 1);
    }
}

#[test]
fn distinct_subgroups_are_distinguished() {
    let a = canonicalize(&g_lambda_mu(&lg(1, 4), &lg(1, 2)));
    let b = canonicalize(&g_lambda_mu(&lg(1, 4), &lg(1, 3)));
    let c = canonicalize(&g_lambda_mu(&lg(1, 2), &lg(1, 2)));
    assert!(!subgroup_equal(&a, &b));
    assert!(!subgroup_equal(&a, &c));
    // coset log(1/2) vs log(1/2) + log(1/4)/2 = log(1/4)
    let d = canonicalize(&g_lambda_mu(&lg(1, 4), &lg(1, 4)));
    assert!(!subgroup_equal(&a, &d));
}

/// Rank-2 kernels must be dense: lattice points come within ε of every target.
#[test]
fn dense_kernels_form_an_epsilon_net() {
    let pairs = [(2, 3), (2, 5), (3, 7), (6, 10), (5, 11)];
    let eps = 0.05;
    for (a, b) in pairs {
        let c = canonicalize(&[(lg(a, 1), 0), (lg(b, 1), 0)]);
        assert_eq!(c.kernel, Kernel::DenseLine, "{a} {b}");
        let (x, y) = (lg(a, 1).to_f64(), lg(b, 1).to_f64());
        let mut points: Vec<f64> = Vec::new();
        for m in -200i32..=200 {
            for n in -200i32..=200 {
                let p = m as f64 * x + n as f64 * y;
                if p.abs() <= 1.5 {
                    points.push(p);
                }
            }
        }
        points.sort_by(f64::total_cmp);
        for t in 0..=40 {
            let target = -1.0 + t as f64 * 0.05;
            let i = points.partition_point(|&p| p < target);
            let near = [i.saturating_sub(1), i.min(points.len() - 1)].iter().map(|&j| (points[j] - target).abs()).fold(f64::MAX, f64::min);
            assert!(near < eps, "({a},{b}) misses {target}");
        }
    }
}

#[test]
fn commensurable_logs_stay_cyclic() {
    for (base, p, r) in [(2i64, 2u32, 3u32), (3, 4, 6), (5, 1, 2)] {
        let c = canonicalize(&[(lg(base.pow(p), 1), 0), (lg(base.pow(r), 1), 0)]);
        let g = num_integer::gcd(p, r);
        assert_eq!(c.kernel, Kernel::Cyclic(lg(1, base.pow(g))), "{base}^{p}, {base}^{r}");
    }
}
