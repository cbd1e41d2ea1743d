use mics_core::{CartanType, Labeling, RootSet, RootSystem};

fn sys(kind: CartanType, rank: usize) -> RootSystem {
    RootSystem::new(kind, rank, Labeling::VinbergOnishchik).unwrap()
}

fn all_systems() -> Vec<RootSystem> {
    use CartanType::*;
    let mut v = Vec::new();
    v.extend((1..=8).map(|n| sys(A, n)));
    v.extend((2..=6).map(|n| sys(B, n)));
    v.extend((2..=6).map(|n| sys(C, n)));
    v.extend((4..=8).map(|n| sys(D, n)));
    v.extend([sys(E, 6), sys(E, 7), sys(E, 8), sys(F, 4), sys(G, 2)]);
    v
}

#[test]
fn gamma_and_phi_sizes() {
    for rs in all_systems() {
        let t = rs.highest_root();
        for g in rs.ids() {
            if rs.is_simply_laced() {
                assert_eq!(rs.gamma_set(g).len() as i32, 2 * rs.height(g) - 2, "{}", rs.name());
            }
            if rs.is_long(g) {
                let expect = rs.rho_pairing(t) - rs.rho_pairing(g);
                assert_eq!(rs.phi_set(g).len() as i32, expect, "{}", rs.name());
            }
        }
    }
}

#[test]
fn reflection_inversions_of_long_roots() {
    for rs in all_systems() {
        for g in rs.ids().filter(|&g| rs.is_long(g)) {
            let n = rs.reflection_inversions(g).unwrap();
            let mut expect = rs.gamma_set(g);
            expect.insert(g);
            assert_eq!(n, expect);
            if rs.is_simply_laced() {
                assert_eq!(n.len() as i32, 2 * rs.height(g) - 1);
            }
        }
    }
}

#[test]
fn h_set_size() {
    for rs in all_systems() {
        let t = rs.highest_root();
        assert_eq!(rs.h_set().len() as i32, 2 * rs.rho_pairing(t) - 1, "{}", rs.name());
    }
}

#[test]
fn minimal_ideal_sizes_and_fibres() {
    for rs in all_systems().into_iter().filter(|r| r.rank() <= 8) {
        let t = rs.highest_root();
        let lattice = rs.fiber_decomposition().unwrap();
        assert_eq!(lattice.ideals().len(), 1 << rs.rank(), "{}", rs.name());
        let h = rs.h_set();
        for mu in rs.ids().filter(|&m| rs.is_long(m)) {
            let min = rs.minimal_ideal(mu).unwrap();
            let expect = rs.rho_pairing(t) - rs.rho_pairing(mu) + 1;
            assert_eq!(min.len() as i32, expect);
            assert!(min.roots().is_subset(&h));
            assert_eq!(lattice.fiber(mu).unwrap().minimal(), &min);
        }
        // abelian ideals inside H are exactly the minimal ones
        let inside_h = lattice
            .ideals()
            .iter()
            .filter(|i| !i.is_empty() && i.roots().is_subset(&h))
            .count();
        let long = rs.ids().filter(|&m| rs.is_long(m)).count();
        assert_eq!(inside_h, long, "{}", rs.name());
        let fibred: usize = lattice.fibers().iter().map(|f| f.ideals.len()).sum();
        assert_eq!(fibred + 1, lattice.ideals().len());
    }
}

#[test]
fn maximal_ideals_match_long_simple_roots() {
    for rs in all_systems() {
        let lattice = rs.fiber_decomposition().unwrap();
        let h = rs.h_set();
        let mut from_alpha = Vec::new();
        for alpha in 0..rs.rank() {
            let a = rs.simple_root(alpha).unwrap();
            if !rs.is_long(a) {
                continue;
            }
            let max = lattice.maximal_ideal(&rs, alpha).unwrap();
            let min = rs.minimal_ideal(a).unwrap();
            assert_eq!(&max.roots().intersection(&h), min.roots());
            assert!(max.roots().iter().all(|g| rs.geq(g, a)));
            let check = rs.complement_pairing_check(&lattice, alpha).unwrap();
            assert!(check.holds, "{} α{}: {:?}", rs.name(), alpha + 1, check.counterexample);
            from_alpha.push(max.roots().clone());
        }
        let mut global: Vec<RootSet> = lattice
            .globally_maximal()
            .into_iter()
            .map(|i| i.roots().clone())
            .collect();
        global.sort();
        from_alpha.sort();
        assert_eq!(global, from_alpha, "{}", rs.name());
    }
}

#[test]
fn transporters_avoid_maximal_ideal() {
    for rs in all_systems().into_iter().filter(|r| r.is_simply_laced()) {
        let lattice = rs.fiber_decomposition().unwrap();
        for alpha in 0..rs.rank() {
            let a = rs.simple_root(alpha).unwrap();
            let max = lattice.maximal_ideal(&rs, alpha).unwrap();
            let outside = max.roots().complement();
            let mut union = RootSet::empty(&rs);
            for g in max.roots().iter() {
                let n = rs.inversion_set(&rs.shortest_transporter(g, a).unwrap().word);
                assert!(n.is_subset(&outside));
                union = union.union(&n);
            }
            assert_eq!(union, outside, "{} α{}", rs.name(), alpha + 1);
            let min = rs.minimal_ideal(a).unwrap();
            let mut from_min = RootSet::empty(&rs);
            for g in min.roots().iter() {
                from_min = from_min.union(&rs.inversion_set(&rs.shortest_transporter(g, a).unwrap().word));
            }
            assert_eq!(from_min, outside);
        }
    }
}

#[test]
fn theta_transporters_stay_in_h() {
    for rs in all_systems() {
        let t = rs.highest_root();
        let mut h_minus = rs.h_set();
        h_minus.remove(t);
        for mu in rs.ids().filter(|&m| rs.is_long(m)) {
            let n = rs.inversion_set(&rs.shortest_transporter(t, mu).unwrap().word);
            assert!(n.is_subset(&h_minus));
        }
    }
}

#[test]
fn depth_of_highest_root() {
    assert_eq!(sys(CartanType::E, 8).depth(sys(CartanType::E, 8).highest_root()).unwrap(), 29);
    let d4 = sys(CartanType::D, 4);
    assert_eq!(d4.depth(d4.highest_root()).unwrap(), 5);
    let b3 = sys(CartanType::B, 3);
    assert!(b3.depth(b3.highest_root()).unwrap_err().is_unsupported());
}

#[test]
fn labelings_agree_on_counts() {
    use CartanType::*;
    for (k, n) in [(E, 6), (E, 7), (E, 8), (F, 4), (D, 5), (G, 2)] {
        let vo = RootSystem::new(k, n, Labeling::VinbergOnishchik).unwrap();
        let bo = RootSystem::new(k, n, Labeling::Bourbaki).unwrap();
        assert_eq!(vo.num_positive(), bo.num_positive());
        assert_eq!(vo.coxeter_number(), bo.coxeter_number());
        let mut a = vo.coeffs(vo.highest_root()).to_vec();
        let mut b = bo.coeffs(bo.highest_root()).to_vec();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }
}

#[test]
fn essential_roots_outside_h() {
    // independently recomputed: only the middle nodes of the long E6 arms
    // produce essential roots outside I(α)_max ∪ H
    let e6 = sys(CartanType::E, 6);
    let report = e6.conjecture_report().unwrap();
    let outside: Vec<(usize, Vec<String>)> = report
        .rows
        .iter()
        .filter(|r| !r.ess_in_h)
        .map(|r| (r.alpha + 1, r.outside_h.iter().map(|&g| e6.format_root(g)).collect()))
        .collect();
    assert_eq!(
        outside,
        [
            (2, vec!["[1 1 1 0 0 0]".to_string()]),
            (4, vec!["[0 0 1 1 1 0]".to_string()])
        ]
    );
    assert!(report.rows.iter().all(|r| r.defect_pattern()));

    for n in 4..=8 {
        let d = sys(CartanType::D, n);
        assert!(d.conjecture_report().unwrap().all_hold(), "D{n}");
    }
}
