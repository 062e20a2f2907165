use frieze_lab::frieze::{topological_order, FriezeSession, ModelledLine};
use frieze_lab::quiver::{Fork, ForkKind, Vertex};
use frieze_lab::{DTilde, RationalFunction, Seed};
use proptest::prelude::*;

fn orientation_strategy(n: usize) -> impl Strategy<Value = String> {
    prop::collection::vec(any::<bool>(), DTilde::edges(n).len())
        .prop_map(|bs| bs.into_iter().map(|b| if b { '<' } else { '>' }).collect())
}

/// Slices by mutation: mutating every vertex once, sources first, turns
/// slice k into slice k + 1; sinks first goes back.
fn slices_by_mutation(d: &DTilde, forward: usize, backward: usize) -> (Vec<Seed>, Vec<Seed>) {
    let order = topological_order(d.quiver()).unwrap();
    let step = |seed: &Seed, order: &[Vertex]| {
        order.iter().fold(seed.clone(), |s, &v| s.mutate(v).unwrap())
    };
    let mut fwd = vec![d.seed()];
    for _ in 0..forward {
        let next = step(fwd.last().unwrap(), &order);
        fwd.push(next);
    }
    let rev: Vec<Vertex> = order.iter().rev().copied().collect();
    let mut back = vec![d.seed()];
    for _ in 0..backward {
        let next = step(back.last().unwrap(), &rev);
        back.push(next);
    }
    (fwd, back)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 12, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn frieze_matches_mutation_sequences(n in 4usize..=6, bits in any::<u64>()) {
        let edges = DTilde::edges(n).len();
        let o: String = (0..edges).map(|b| if bits >> b & 1 == 1 { '<' } else { '>' }).collect();
        let d = DTilde::build(n, &o).unwrap();
        let f = FriezeSession::new(&d).unwrap();
        let (fwd, back) = slices_by_mutation(&d, 2, 2);
        for (k, s) in fwd.iter().enumerate() {
            for (&v, x) in s.variables() {
                prop_assert_eq!(&f.frieze_value(k as i64, v).unwrap(), x);
            }
        }
        for (k, s) in back.iter().enumerate() {
            for (&v, x) in s.variables() {
                prop_assert_eq!(&f.frieze_value(-(k as i64), v).unwrap(), x);
            }
        }
    }

    #[test]
    fn mesh_holds_everywhere(o in orientation_strategy(5)) {
        let d = DTilde::build(5, &o).unwrap();
        let f = FriezeSession::new(&d).unwrap();
        for k in -2..3 {
            for i in 1..=6 {
                prop_assert!(f.check_mesh(k, i).unwrap());
            }
        }
    }

    #[test]
    fn fork_products_are_squares_up_to_the_initial_pair(o in orientation_strategy(4), k in -2i64..4) {
        let d = DTilde::build(4, &o).unwrap();
        prop_assume!(d.fork_kind(Fork::Bottom) != ForkKind::Mixed);
        let f = FriezeSession::new(&d).unwrap();
        let v = f.modelled_value(k, ModelledLine::Bottom).unwrap();
        let scaled = &v * &(&RationalFunction::var(1) * &RationalFunction::var(2));
        prop_assert!(scaled.sqrt().is_ok(), "{}", scaled);
    }
}

#[test]
fn printed_first_slice() {
    let d = DTilde::build(4, "all-in").unwrap();
    let f = FriezeSession::new(&d).unwrap();
    let rf = |s| frieze_lab::exactalg::parse_rational(s).unwrap();
    assert_eq!(f.frieze_value(1, 2).unwrap(), rf("(1+u3)/u2"));
    assert_eq!(f.modelled_value(1, ModelledLine::Top).unwrap(), rf("(1+u3)^2/(u4*u5)"));
    assert_eq!(f.dump(0, 0).unwrap().len(), 5);
    assert_eq!(f.dump_modelled(0, 2).unwrap().len(), 9);
}

#[test]
fn relation_shift_follows_fork_direction() {
    for (o, bottom, top) in [("all-in", 1, 1), ("in-out", 1, -1), ("all-out", -1, -1), ("out-in", -1, 1)] {
        let d = DTilde::build(5, o).unwrap();
        let f = FriezeSession::new(&d).unwrap();
        assert_eq!(f.fork_relation_shift(Fork::Bottom).unwrap(), bottom, "{o}");
        assert_eq!(f.fork_relation_shift(Fork::Top).unwrap(), top, "{o}");
        for k in -2..3 {
            assert!(f.check_fork_relation(k, Fork::Bottom, bottom).unwrap(), "{o} {k}");
            assert!(f.check_fork_relation(k, Fork::Top, top).unwrap(), "{o} {k}");
        }
    }
}
