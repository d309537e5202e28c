use wahlrank_core::gaussian::{noether_rank, parity_vanishing_holds};
use wahlrank_core::{gamma_rank, gamma_rank_with, parse_poly, Arithmetic, GaussianMaps, PlaneCurve, SmoothMode};

fn curve(text: &str) -> PlaneCurve {
    PlaneCurve::new(parse_poly(text).unwrap(), SmoothMode::Probabilistic).unwrap()
}

#[test]
fn octic_with_cross_term() {
    let c = curve("x^8 + y^8 + 1 + 3*x^4*y^4");
    let r0 = gamma_rank(&c, 0).unwrap();
    assert_eq!((r0.rank, r0.corank), (60, 0));
    let r1 = gamma_rank(&c, 1).unwrap();
    assert_eq!((r1.rank, r1.corank, r1.domain_dim), (90, 10, 381));
    assert!(r1.matches);
}

#[test]
fn sextic_without_symmetry() {
    let c = curve("x^6 + y^6 + 1 + x^3*y^2 + 2*x*y - x^2");
    let mut maps = GaussianMaps::new(&c);
    assert_eq!(maps.blocks(1).len(), 1);
    let r = gamma_rank_with(&mut maps, 0, &Arithmetic::Exact).unwrap();
    assert_eq!((r.rank, r.corank), (27, 0));
    assert!(parity_vanishing_holds(&mut maps, 1).unwrap());
}

#[test]
fn septic_first_order_has_at_least_the_plane_corank() {
    // Outside the proven range there is no prediction, but the corank is
    // still bounded below by the corank of the restriction from the plane.
    let c = curve("x^7 + y^7 + 1 + x^2*y^3 - 2*x*y");
    let r = gamma_rank(&c, 1).unwrap();
    assert!(!r.in_theorem_range);
    assert_eq!(r.predicted_rank, None);
    assert!(r.corank >= 10, "corank {}", r.corank);
    assert_eq!(r.codomain_dim, 5 * 14);
}

#[test]
fn fermat_decic_first_order() {
    let r = gamma_rank(&PlaneCurve::fermat(10).unwrap(), 1).unwrap();
    assert_eq!((r.rank, r.corank, r.codomain_dim), (165, 10, 175));
}

#[test]
fn noether_for_generic_quintic() {
    let (rank, three_g_minus_3) = noether_rank(&curve("y^5 + x^5 + 1 + 3*x^2*y^2 - x")).unwrap();
    assert_eq!((rank, three_g_minus_3), (15, 15));
}

#[test]
fn screening_agrees_with_exact_on_generic_curve() {
    let c = curve("x^6 + y^6 + 1 + x^3*y^2 + 2*x*y - x^2");
    let mut maps = GaussianMaps::new(&c);
    let exact = gamma_rank_with(&mut maps, 1, &Arithmetic::Exact).unwrap();
    let screened = gamma_rank_with(&mut maps, 1, &Arithmetic::ModularThenExact(vec![1_000_003, 1_000_033])).unwrap();
    assert_eq!(exact.rank, screened.rank);
    assert_eq!(exact.domain_dim, screened.domain_dim);
}

const GENERIC_OCTIC: &str = "x^8 + y^8 + 1 + x^3*y^4 - 2*x^5*y + x*y";
const GENERIC_DECIC: &str = "x^10 + y^10 + 1 + x^3*y^4 - 2*x^7*y + x*y";

#[test]
fn generic_octic_first_order() {
    let c = curve(GENERIC_OCTIC);
    let mut maps = GaussianMaps::new(&c);
    assert_eq!(maps.blocks(1).len(), 1);
    let r = gamma_rank_with(&mut maps, 1, &Arithmetic::Exact).unwrap();
    assert_eq!((r.rank, r.corank), (90, 10));
}

#[test]
fn generic_decic_second_order_modular() {
    let mut maps = GaussianMaps::new(&curve(GENERIC_DECIC));
    let r = gamma_rank_with(&mut maps, 2, &Arithmetic::Modular(vec![1_000_003])).unwrap();
    assert_eq!((r.rank, r.corank), (210, 35));
}

/// About two minutes in an optimized build; run with `--ignored`.
#[test]
#[ignore]
fn generic_decic_second_order_exact() {
    let r = gamma_rank(&curve(GENERIC_DECIC), 2).unwrap();
    assert_eq!((r.rank, r.corank, r.codomain_dim), (210, 35, 245));
}
