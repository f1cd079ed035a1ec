#![allow(dead_code)]

/// Printed rows at t = 7000: (eps, Z, Z_ref, |Z - Z_ref|).
pub const TABLE_7000: [(f64, (f64, f64), (f64, f64), f64); 5] = [
    (0.1, (3.241730475804, -0.5787043468126), (3.241771462370, -0.578683059836), 4.62e-5),
    (0.2, (3.744381644160, -1.199282431530), (3.744419881769, -1.199241919295), 5.57e-5),
    (0.3, (4.642337399179, -1.907135487575), (4.642369954238, -1.907080635877), 6.38e-5),
    (0.4, (6.033267420500, -2.755039800815), (6.033289474138, -2.754980028392), 6.37e-5),
    (0.5, (8.069550741786, -3.807665184897), (8.069554328448, -3.807617504896), 4.78e-5),
];

/// Printed rows at t = 250000.
pub const TABLE_250000: [(f64, (f64, f64), (f64, f64), f64); 5] = [
    (0.1, (-0.9050244263086, 0.1402585183494), (-0.9050238453328, 0.1402587799723), 6.37e-7),
    (0.2, (-1.3080455298552, 0.2878855199489), (-1.3080449625265, 0.2878860590214), 7.83e-7),
    (0.3, (-2.143656564420, 0.441671103478), (-2.143656009082, 0.441671983111), 1.04e-6),
    (0.4, (-3.715336354275, 0.578566730780), (-3.715335798319, 0.578568148509), 1.52e-6),
    (0.5, (-6.582066395361, 0.629253718227), (-6.582065829497, 0.629256211048), 2.56e-6),
];

/// First seven ordinates of zeta zeros, to two decimals.
pub const FIRST_SEVEN: [f64; 7] = [14.13, 21.02, 25.01, 30.42, 32.93, 37.58, 40.91];

/// The same zeros to high accuracy.
pub const FIRST_SEVEN_EXACT: [f64; 7] =
    [14.134725141734693, 21.022039638771555, 25.010857580145689, 30.424876125859513, 32.935061587739190, 37.586178158825671, 40.918719012147495];

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}
