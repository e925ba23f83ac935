use rootcase::roots::{angle_class, Family};
use rootcase::{CartanType, FieldElem, RootSystem, Vect};

fn all_types() -> Vec<CartanType> {
    let mut out = Vec::new();
    for n in 1..=8 {
        out.push(CartanType::new(Family::A, n).unwrap());
    }
    for n in 2..=8 {
        out.push(CartanType::new(Family::B, n).unwrap());
    }
    for n in 3..=8 {
        out.push(CartanType::new(Family::C, n).unwrap());
        out.push(CartanType::new(Family::D, n).unwrap());
    }
    for n in 6..=8 {
        out.push(CartanType::new(Family::E, n).unwrap());
    }
    out.push(CartanType::new(Family::F, 4).unwrap());
    out.push(CartanType::new(Family::G, 2).unwrap());
    out
}

fn reflect(a: &Vect, v: &Vect) -> Vect {
    let k = (&FieldElem::from_int(2) * &v.dot(a)) * a.norm_sq().inverse().unwrap();
    v.add_scaled(&-k, a)
}

#[test]
fn cardinalities() {
    for t in all_types() {
        let rs = RootSystem::shared(t);
        assert_eq!(rs.len(), t.root_count(), "{t}");
    }
}

#[test]
fn e8_shape() {
    let rs = RootSystem::of(Family::E, 8).unwrap();
    let integral = rs.roots().iter().filter(|r| r.support() == 2).count();
    assert_eq!(integral, 112);
    assert_eq!(rs.len() - integral, 128);
}

#[test]
fn negation_and_reflection_closure() {
    for t in all_types() {
        let rs = RootSystem::shared(t);
        for a in rs.roots() {
            assert!(rs.contains(&-a), "{t}: -{a}");
            for v in rs.roots() {
                assert!(rs.contains(&reflect(a, v)), "{t}: s_{a}({v})");
            }
        }
    }
}

#[test]
fn a_roots_are_sum_zero() {
    for n in 1..=8 {
        let rs = RootSystem::of(Family::A, n).unwrap();
        for r in rs.roots() {
            let s = r.coords().iter().fold(FieldElem::from_int(0), |acc, c| &acc + c);
            assert_eq!(s, FieldElem::from_int(0));
        }
    }
}

#[test]
fn pairwise_angles_are_root_angles() {
    for t in all_types() {
        let rs = RootSystem::shared(t);
        for a in rs.roots() {
            for b in rs.roots() {
                angle_class(a, b).unwrap_or_else(|e| panic!("{t}: {a} {b}: {e}"));
            }
        }
    }
}

#[test]
fn simple_bases_are_bases() {
    for t in all_types() {
        let rs = RootSystem::shared(t);
        assert_eq!(rs.simple_base().len(), t.rank, "{t}");
        for r in rs.roots() {
            let c = rs.base_coefficients(r).unwrap_or_else(|| panic!("{t}: {r} not in span"));
            assert!(c.iter().all(|x| x.is_integer()), "{t}: {r} -> {c:?}");
            let nonneg = c.iter().all(|x| x.sign() >= 0);
            let nonpos = c.iter().all(|x| x.sign() <= 0);
            assert!(nonneg || nonpos, "{t}: {r} -> {c:?}");
        }
    }
}
