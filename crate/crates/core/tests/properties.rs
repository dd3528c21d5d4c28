//! Algebraic invariants on generated values.

use flexmeadow::axioms::Term;
use flexmeadow::valcore::rational;
use flexmeadow::{Boundary, Exp, ExtNum, FieldElem, Neutrix, Valuation};
use proptest::prelude::*;

fn exp() -> impl Strategy<Value = Exp> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Exp::ratio(n, d))
}

fn monomial() -> impl Strategy<Value = FieldElem> {
    (-12i64..=12, 1i64..=4, exp()).prop_map(|(n, d, q)| FieldElem::monomial(rational(n, d), q))
}

fn series() -> impl Strategy<Value = FieldElem> {
    prop::collection::vec(monomial(), 1..4)
        .prop_map(|ms| ms.iter().fold(FieldElem::zero(), |acc, m| &acc + m))
}

fn field() -> impl Strategy<Value = FieldElem> {
    (series(), series()).prop_map(|(n, d)| if d.is_zero() { n } else { &n * &d.inv().unwrap() })
}

fn neutrix() -> impl Strategy<Value = Neutrix> {
    prop_oneof![
        Just(Neutrix::Zero),
        Just(Neutrix::Full),
        (exp(), any::<bool>()).prop_map(|(q, c)| Neutrix::cut(q, if c { Boundary::Closed } else { Boundary::Open })),
    ]
}

fn ext() -> impl Strategy<Value = ExtNum> {
    (field(), neutrix()).prop_map(|(a, n)| ExtNum::new(a, n))
}

fn term() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        Just(Term::Zero),
        Just(Term::One),
        Just(Term::Err),
        prop::sample::select(vec!["x", "y", "z", "w1"]).prop_map(Term::var),
    ];
    leaf.prop_recursive(5, 40, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::add(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::mul(a, b)),
            inner.clone().prop_map(Term::neg),
            inner.clone().prop_map(Term::inv),
            inner.prop_map(Term::nof),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_axioms(x in field(), y in field(), z in field()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.inv().unwrap(), FieldElem::one());
        }
    }

    #[test]
    fn order_is_compatible(x in field(), y in field(), z in field()) {
        if x < y {
            prop_assert!(&x + &z < &y + &z);
            if z > FieldElem::zero() {
                prop_assert!(&x * &z < &y * &z);
            }
        }
    }

    #[test]
    fn valuation_laws(x in field(), y in field()) {
        prop_assert_eq!((&x * &y).valuation(), x.valuation().plus(&y.valuation()));
        let (vx, vy) = (x.valuation(), y.valuation());
        let vs = (&x + &y).valuation();
        prop_assert!(vs >= vx.clone().min(vy.clone()));
        if vx != vy {
            prop_assert_eq!(vs, vx.min(vy));
        }
    }

    #[test]
    fn epsilon_is_infinitesimal(n in 1i64..1_000_000) {
        let e = FieldElem::epsilon();
        prop_assert!(FieldElem::zero() < e && e < FieldElem::from_rational(rational(1, n)));
    }

    #[test]
    fn field_literals_round_trip(x in field()) {
        let printed = x.to_string();
        let back: FieldElem = printed.parse().unwrap();
        prop_assert_eq!(&back, &x);
        prop_assert_eq!(back.to_string(), printed);
    }

    #[test]
    fn neutrices_are_totally_ordered(a in neutrix(), b in neutrix(), c in neutrix()) {
        prop_assert!(a.is_subset(&b) || b.is_subset(&a));
        prop_assert_eq!(a.sum(&b), b.sum(&a));
        prop_assert_eq!(a.sum(&a), a.clone());
        prop_assert_eq!(a.sum(&Neutrix::Zero), a.clone());
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&Neutrix::Zero), Neutrix::Zero);
        prop_assert_eq!(a.inv().inv(), a.clone());
        let (r, i) = a.decompose();
        prop_assert!(i.is_idempotent());
        prop_assert_eq!(i.scale(&r), a.clone());
        let back: Neutrix = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn scaling_commutes_with_products(a in neutrix(), b in neutrix(), s in field()) {
        prop_assume!(!s.is_zero());
        prop_assert_eq!(a.scale(&s).mul(&b), a.mul(&b).scale(&s));
    }

    #[test]
    fn inverse_is_independent_of_the_scalar(q in exp(), closed in any::<bool>(), r in field(), u in 1i64..50) {
        prop_assume!(!r.is_zero());
        let i = Neutrix::cut(Exp::zero(), if closed { Boundary::Closed } else { Boundary::Open });
        let n = Neutrix::cut(q, if closed { Boundary::Closed } else { Boundary::Open });
        let unit = &FieldElem::from_rational(rational(u, 7)) * &(&FieldElem::one() + &FieldElem::epsilon());
        let s = &r * &unit;
        prop_assert_eq!(i.scale(&r), i.scale(&s));
        prop_assert_eq!(i.scale(&r.inv().unwrap()), i.scale(&s.inv().unwrap()));
        let (r0, i0) = n.decompose();
        prop_assert_eq!(n.inv(), i0.scale(&r0.inv().unwrap()));
    }

    #[test]
    fn external_arithmetic(x in ext(), y in ext(), z in ext()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x + &x.neutrix_part(), x.clone());
        prop_assert_eq!(&x + &(-&x), x.neutrix_part());
        let xy_z = &x * &(&y + &z);
        let split = &(&x * &y) + &(&x * &z);
        prop_assert!(xy_z.is_subset(&split));
        let n = x.neutrix_part();
        let corrected = &(&xy_z + &(&n * &y)) + &(&n * &z);
        prop_assert_eq!(corrected, split);
    }

    #[test]
    fn external_inverse(x in ext()) {
        let xi = x.inv();
        prop_assert_eq!(xi.inv(), x.clone());
        prop_assert_eq!(&x * &(&x * &xi), x.clone());
        prop_assert!(x.satisfies_flexible_inverse());
        if x.is_zeroless() {
            let a_inv = x.precise().inv().unwrap();
            prop_assert!(x.neutrix().scale(&a_inv).is_subset(&Neutrix::infinitesimal()));
        }
        let back: ExtNum = x.to_string().parse().unwrap();
        prop_assert_eq!(&back, &x);
        prop_assert_eq!(back.neutrix(), x.neutrix());
    }

    #[test]
    fn quotient_membership(a in ext(), b in ext(), x in field()) {
        let q = a.quotient(&b);
        let inside = (&ExtNum::exact(x.clone()) * &b).is_subset(&a);
        prop_assert_eq!(q.contains(&x), inside);
        if let Some(set) = q.as_set() {
            prop_assert!((&ExtNum::exact(set.precise().clone()) * &b).is_subset(&a));
        }
    }

    #[test]
    fn terms_print_and_parse_back(t in term()) {
        let printed = t.to_string();
        let back: Term = printed.parse().unwrap();
        prop_assert_eq!(back, t);
    }
}

#[test]
fn zero_has_infinite_valuation() {
    assert_eq!(FieldElem::zero().valuation(), Valuation::Infinite);
}
