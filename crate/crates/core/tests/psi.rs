use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zext::psi::{jet_direct, jet_series, psi, psi_jet, SWITCH_RADIUS};

/// Derivatives 0..=6 from a 50-digit reference evaluation.
const REFERENCE: [(f64, [f64; 7]); 8] = [
    (0.25, [0.5, -1.0, 4.934802200544679, -9.869604401089358, 6.652221958861486, 562.2804730078096, -5744.902368194092]),
    (0.75, [0.5, 1.0, 4.934802200544679, 9.869604401089358, 6.652221958861486, -562.2804730078096, -5744.902368194092]),
    (0.3, [0.4559659646634819, -0.765325903859586, 4.459967188926106, -8.942734928289218, 28.461840254016238, 326.55844315179394, -3771.0304327781455]),
    (0.2, [0.5563742558145474, -1.2590533181193708, 5.423267195307021, -9.367576310769822, -29.620266865911614, 909.0454403149034, -8192.27041026581]),
    (0.6, [0.4003839479891401, 0.3582094368646387, 3.7492786189852234, 4.966985493181571, 47.10625839122303, -86.52353375099179, -1351.4414688946476]),
    (0.1, [0.7107455789448922, -1.8387367544307527, 6.02183657608276, -0.272933562616584, -170.33042494526794, 1990.1186063555401, -13179.083443876649]),
    (0.5, [0.3826834323650898, 0.0, 3.4979237446201634, 0.0, 50.83260498445191, 0.0, -626.9196002768266]),
    (0.3779, [0.4092253687985702, -0.4423652782383127, 3.870382811369846, -5.9843169820649065, 44.83546003258011, 120.35008945535812, -1723.8905248521148]),
];

#[test]
fn jet_matches_reference() {
    for (p, want) in REFERENCE {
        let got = psi_jet(p, 6).unwrap().values;
        for k in 0..7 {
            let scale = want[k].abs().max(1.0);
            assert!((got[k] - want[k]).abs() <= 1e-10 * scale, "p={p} k={k}: {} vs {}", got[k], want[k]);
        }
    }
}

#[test]
fn order_zero_is_psi() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..500 {
        let p: f64 = rng.gen();
        for order in 0..=6 {
            assert_eq!(psi_jet(p, order).unwrap().values[0].to_bits(), psi(p).unwrap().to_bits());
        }
    }
}

#[test]
fn symmetric_about_half() {
    let j = psi_jet(0.5, 6).unwrap();
    assert!(j.values[1].abs() < 1e-14 && j.values[3].abs() < 1e-12 && j.values[5].abs() < 1e-10);
    for i in 1..250 {
        let h = i as f64 / 1000.0;
        let a = psi(0.5 + h).unwrap();
        let b = psi(0.5 - h).unwrap();
        assert!((a - b).abs() < 1e-14, "h={h}");
    }
}

#[test]
fn finite_and_continuous_at_removable_points() {
    for c in [0.25, 0.75] {
        let v = psi(c).unwrap();
        assert_eq!(v, 0.5);
        for d in [1e-9, -1e-9] {
            assert!((psi(c + d).unwrap() - v).abs() <= 1e-6);
        }
        // Richardson limit from both sides
        let h = 1e-6;
        let l = (4.0 * (psi(c + h / 2.0).unwrap() + psi(c - h / 2.0).unwrap()) / 2.0
            - (psi(c + h).unwrap() + psi(c - h).unwrap()) / 2.0)
            / 3.0;
        assert!((l - v).abs() < 1e-12);
    }
}

#[test]
fn range_sweep() {
    for i in 0..10_000 {
        let v = psi(i as f64 / 9999.0).unwrap();
        assert!((0.3826..=0.9239).contains(&v), "i={i} v={v}");
    }
    assert!((psi(0.5).unwrap() - 0.382683).abs() < 1e-6);
    assert!((psi(0.0).unwrap() - 0.923879).abs() < 1e-6);
}

#[test]
fn branches_agree_on_seam() {
    for c in [0.25, 0.75] {
        for side in [-1.0, 1.0] {
            for off in [0.0, 0.01, -0.01] {
                let p = c + side * (SWITCH_RADIUS + off);
                let a = jet_direct(p);
                let b = jet_series(c, p);
                for k in 0..7 {
                    let (x, y) = (a.derivative(k), b.derivative(k));
                    assert!((x - y).abs() <= 1e-9 * x.abs().max(1.0), "p={p} k={k}: {x} vs {y}");
                }
            }
        }
    }
}

/// Central difference of the (k-1)-th derivative, one Richardson step.
fn fd(p: f64, k: usize) -> f64 {
    let h = 1e-3;
    let g = |x: f64| psi_jet(x, k - 1).unwrap().values[k - 1];
    let d = |h: f64| (g(p + h) - g(p - h)) / (2.0 * h);
    (4.0 * d(h / 2.0) - d(h)) / 3.0
}

#[test]
fn finite_difference_at_point_three() {
    let j = psi_jet(0.3, 6).unwrap();
    for k in 1..=6 {
        let f = fd(0.3, k);
        assert!((j.values[k] - f).abs() <= 1e-6 * j.values[k].abs().max(1.0), "k={k}");
    }
}

#[test]
fn finite_difference_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut n = 0;
    while n < 50 {
        let p: f64 = rng.gen_range(0.01..0.99);
        if (p - 0.25).abs() < 1e-2 || (p - 0.75).abs() < 1e-2 {
            continue;
        }
        n += 1;
        let j = psi_jet(p, 6).unwrap();
        for k in 1..=6 {
            let tol = if k <= 4 { 1e-6 } else { 1e-4 };
            let f = fd(p, k);
            assert!((j.values[k] - f).abs() <= tol * j.values[k].abs().max(1.0), "p={p} k={k}");
        }
    }
}
