//! Invariants of the kinematics, checked over random and gridded inputs.

mod common;

use common::rel_err;
use lightframe_core::conservation::pre_emission_from_lab;
use lightframe_core::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn beta(v: f64) -> Beta {
    Beta::new(v).unwrap()
}

fn pre(v: f64) -> Epsilon<PreEmission> {
    Epsilon::pre_emission(v).unwrap()
}

fn random_interval(rng: &mut impl Rng) -> IntervalTriple {
    IntervalTriple::new(
        rng.gen_range(-5.0..5.0),
        rng.gen_range(-5.0..5.0),
        rng.gen_range(-5.0..5.0),
        FrameLabel::A,
    )
}

#[test]
fn gamma_monotone_and_normalised() {
    let mut prev = 0.0;
    for i in 0..=9999 {
        let b = 0.9999 * i as f64 / 9999.0;
        let g = gamma(beta(b));
        assert!(g >= 1.0 && g >= prev);
        assert!(rel_err(g * (1.0 - b * b).sqrt(), 1.0) <= 1e-12, "beta={b}");
        prev = g;
    }
}

#[test]
fn boosts_preserve_norm_and_invert() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..10_000 {
        let iv = random_interval(&mut rng);
        let b = beta(rng.gen_range(-0.99..0.99));
        let axis = if rng.gen() {
            BoostAxis::X
        } else {
            BoostAxis::Y
        };
        let out = boost_interval(iv, b, axis, FrameLabel::S).unwrap();
        assert!((out.minkowski_norm() - iv.minkowski_norm()).abs() <= 1e-10);
        let back = boost_interval(out, -b, axis, FrameLabel::A).unwrap();
        assert!((back.dx - iv.dx).abs() <= 1e-12);
        assert!((back.dy - iv.dy).abs() <= 1e-12);
        assert!((back.dt - iv.dt).abs() <= 1e-12);
    }
}

#[test]
fn collinear_boosts_compose() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..2_000 {
        let iv = random_interval(&mut rng);
        let (b1, b2) = (
            beta(rng.gen_range(-0.9..0.9)),
            beta(rng.gen_range(-0.9..0.9)),
        );
        let two = boost_interval(iv, b1, BoostAxis::Y, FrameLabel::SPrime)
            .and_then(|mid| boost_interval(mid, b2, BoostAxis::Y, FrameLabel::S))
            .unwrap();
        let one =
            boost_interval(iv, compose_collinear(b1, b2), BoostAxis::Y, FrameLabel::S).unwrap();
        assert!((two.dx - one.dx).abs() <= 1e-10);
        assert!((two.dy - one.dy).abs() <= 1e-10);
        assert!((two.dt - one.dt).abs() <= 1e-10);
    }
}

proptest! {
    #[test]
    fn doppler_reciprocity(x in 1e-3f64..1e3, b in -0.99f64..0.99) {
        let there = doppler_longitudinal(x, beta(b));
        let back = doppler_longitudinal(1.0, beta(-b));
        prop_assert!(rel_err(there * back, x) <= 1e-12);
    }

    #[test]
    fn recoil_doppler_is_recoil_factor(eps in 0.0f64..0.49) {
        let f = doppler_longitudinal(1.0, beta(eps / (1.0 - eps)));
        prop_assert!(rel_err(f, (1.0 - 2.0 * eps).sqrt()) <= 1e-12);
    }

    #[test]
    fn dimensionless_conversion_is_scale_invariant(
        mass in 1e-3f64..1e3, energy in 1e-3f64..1e6, k in 1e-6f64..1e6,
    ) {
        let base = PhysicalInputs {
            plate_rest_mass: mass,
            photon_energy: energy,
            plate_separation: 1.0,
            boost_speed_fraction: 0.2,
            lifetime: 0.0,
        };
        let scaled = PhysicalInputs { plate_rest_mass: mass * k, photon_energy: energy * k, ..base };
        let a = to_dimensionless(&base).unwrap().eps_lab.value();
        let b = to_dimensionless(&scaled).unwrap().eps_lab.value();
        prop_assert!(rel_err(b, a) <= 1e-12);
    }

    #[test]
    fn inversion_monotone(a in 0.0f64..50.0, d in 1e-6f64..10.0) {
        let lo = invert_frequency(Epsilon::lab_defined(a).unwrap());
        let hi = invert_frequency(Epsilon::lab_defined(a + d).unwrap());
        prop_assert!(hi < lo);
    }

    #[test]
    fn mirror_frequency_falls_with_mirror_lightness(
        e in 0.0f64..5.0, d in 1e-6f64..1.0, b in -0.95f64..0.95,
    ) {
        let heavy = mirror_reflection(Epsilon::incident(e).unwrap(), beta(b));
        let light = mirror_reflection(Epsilon::incident(e + d).unwrap(), beta(b));
        prop_assert!(light.freq_ratio < heavy.freq_ratio);
        prop_assert!(light.gamma_factor_big > 0.0 && light.gamma_factor_big <= 1.0);
    }

    #[test]
    fn reflection_conserves(e in 0.0f64..5.0, b in -0.95f64..0.95) {
        let m = mirror_reflection(Epsilon::incident(e).unwrap(), beta(b));
        let res = conservation_residuals(&ConservationSystem::Reflection {
            eps_i: e, beta: b, reflection: m,
        });
        prop_assert!(res.max_abs() <= 1e-10, "{:?}", res);
    }

    #[test]
    fn frame_chain_consistency(eps in 0.0f64..0.49, tau in 0.0f64..10.0, bu in 0.0f64..0.99) {
        let r = total_times_pre_emission(pre(eps), beta(bu), tau).unwrap();
        let recoil = emission_recoil(pre(eps)).beta_recoil;
        let aggregate = IntervalTriple::new(0.0, -recoil.value() * r.dt_a, r.dt_a, FrameLabel::A);
        let in_plate = boost_interval(aggregate, -recoil, BoostAxis::Y, FrameLabel::SPrime).unwrap();
        prop_assert!(rel_err(in_plate.dt, r.dt_sprime) <= 1e-12);
        prop_assert!(in_plate.dy.abs() <= 1e-12 * r.dt_a);
        prop_assert!(rel_err(r.dt_s, r.beta_u.gamma() * r.dt_a) <= 1e-12);
        prop_assert!(rel_err(r.dt_sprime * r.beta_u.gamma() / r.dt_s, r.contraction_ratio) <= 1e-12);
        if bu > 0.0 && eps > 0.0 {
            prop_assert!(r.dt_sprime <= r.dt_a && r.dt_a <= r.dt_s);
        }
        prop_assert!(r.f_eps >= 1.0 && r.g_eps >= 1.0);
    }

    #[test]
    fn rise_intervals_invariants(eps in 0.0f64..0.49, bu in 0.0f64..0.99) {
        let r = rise_intervals(pre(eps), beta(bu)).unwrap();
        prop_assert_eq!((r.in_a.dx, r.in_a.dy, r.in_a.dt), (0.0, 1.0, 1.0));
        prop_assert_eq!(r.in_sprime.dx, 0.0);
        prop_assert!(rel_err(r.in_s.dt, gamma(beta(bu))) <= 1e-12);
        let shrink = (1.0 - 2.0 * eps).sqrt();
        prop_assert!(rel_err(r.in_sprime.dt, 1.0 / shrink) <= 1e-12);
        prop_assert!(rel_err(r.in_s.dt, gamma(beta(bu)) * shrink * r.in_sprime.dt) <= 1e-12);
    }

    #[test]
    fn correction_decreases_with_lab_energy(a in 0.0f64..20.0, d in 1e-6f64..5.0) {
        let lo = total_times(&DimensionlessParams::new(a, 0.5, 1.0).unwrap()).unwrap();
        let hi = total_times(&DimensionlessParams::new(a + d, 0.5, 1.0).unwrap()).unwrap();
        prop_assert!(hi.correction_factor < lo.correction_factor);
        prop_assert!(lo.correction_factor <= 1.0);
    }
}

#[test]
fn residuals_vanish_on_grid() {
    for i in 0..1000 {
        let eps = 0.4999 * i as f64 / 999.0;
        let e = pre(eps);
        for system in [
            ConservationSystem::Emission {
                eps,
                solution: emission_recoil(e),
            },
            ConservationSystem::Absorption {
                eps,
                solution: absorption_recoil(e),
            },
        ] {
            let res = conservation_residuals(&system);
            assert!(res.max_abs() <= 1e-12, "eps={eps}: {res:?}");
        }
    }
}

#[test]
fn emission_mass_vanishes_at_domain_edge() {
    let near = emission_recoil(pre(0.5 - 1e-15)).mass_ratio;
    assert!(near < 1e-7);
    assert_eq!(
        Epsilon::<PreEmission>::new(0.5),
        Err(Error::PhotonTooEnergetic(0.5))
    );
}

#[test]
fn law_equivalence_and_oracle_sweep() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..1000 {
        let eps = rng.gen_range(0.0..0.49);
        let tau = rng.gen_range(0.0..10.0);
        let analytic = total_times_pre_emission(pre(eps), Beta::ZERO, tau)
            .unwrap()
            .dt_a;
        let traced = trace_experiment_oracle(pre(eps), tau).unwrap();
        assert!(rel_err(traced, analytic) <= 1e-12, "eps={eps} tau={tau}");
    }
    for i in 0..=1000 {
        let lab = Epsilon::lab_defined(10.0 * i as f64 / 1000.0).unwrap();
        let eps = pre_emission_from_lab(lab).unwrap().value();
        let ratio = (1.0 - 2.0 * eps).sqrt() / (1.0 - eps);
        assert!(rel_err(ratio, 1.0 / (1.0 + lab.value().powi(2)).sqrt()) <= 1e-12);
        let r = total_times(&DimensionlessParams::new(lab.value(), 0.3, 1.0).unwrap()).unwrap();
        assert!(rel_err(r.contraction_ratio, r.correction_factor) <= 1e-12);
    }
}

#[test]
fn rigid_limit_converges_quadratically() {
    for k in 2..8 {
        let lab = 10f64.powi(-k);
        let r = total_times(&DimensionlessParams::new(lab, 0.6, 1.0).unwrap()).unwrap();
        let baseline = r.rigid_baseline();
        // deviation from the rigid law is -lab^2/2 to leading order
        let deviation = r.dt_sprime / baseline - 1.0;
        assert!(deviation.abs() <= lab * lab, "lab={lab}: {deviation}");
        assert!(rel_err(r.correction_offset(), -0.5 * lab * lab) <= 1e-2);
    }
}
