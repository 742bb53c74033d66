//! Brute-force oracles used to cross-check the library from tests.
//!
//! Everything here is derived independently of the main crate: the Dubins
//! word lengths are computed in a normalized frame (start at the origin,
//! goal on the +x axis, unit radius, angles counterclockwise from +x) from
//! the tangent-circle construction, with no code shared with the planner.

/// Word order used throughout: RSR, RSL, LSL, LSR.
pub const WORD_NAMES: [&str; 4] = ["RSR", "RSL", "LSL", "LSR"];

const TAU: f64 = std::f64::consts::TAU;

fn mod_tau(a: f64) -> f64 {
    let x = a.rem_euclid(TAU);
    if x > TAU - 1e-10 { 0.0 } else { x }
}

/// Lengths of the four CSC words for a start/goal pose in compass
/// convention (heading degrees clockwise from north), `None` where the
/// word is infeasible. Order per [`WORD_NAMES`].
pub fn csc_word_lengths(
    start: (f64, f64, f64),
    goal: (f64, f64, f64),
    radius: f64,
) -> [Option<f64>; 4] {
    let (sx, sy, sh) = start;
    let (gx, gy, gh) = goal;
    // compass heading -> mathematical direction angle
    let phi0 = (90.0 - sh).to_radians();
    let phi1 = (90.0 - gh).to_radians();
    let (dx, dy) = (gx - sx, gy - sy);
    let psi_line = dy.atan2(dx);
    let d = (dx * dx + dy * dy).sqrt() / radius;
    let alpha = mod_tau(phi0 - psi_line);
    let beta = mod_tau(phi1 - psi_line);

    let rsr = {
        let c1 = (alpha.sin(), -alpha.cos());
        let c2 = (d + beta.sin(), -beta.cos());
        let (ex, ey) = (c2.0 - c1.0, c2.1 - c1.1);
        let psi = ey.atan2(ex);
        let p = (ex * ex + ey * ey).sqrt();
        Some(mod_tau(alpha - psi) + p + mod_tau(psi - beta))
    };
    let rsl = {
        let c1 = (alpha.sin(), -alpha.cos());
        let c2 = (d - beta.sin(), beta.cos());
        let (ex, ey) = (c2.0 - c1.0, c2.1 - c1.1);
        let dd = (ex * ex + ey * ey).sqrt();
        if dd < 2.0 {
            None
        } else {
            let p = (dd * dd - 4.0).sqrt();
            let psi_t = ey.atan2(ex) - 2.0f64.atan2(p);
            Some(mod_tau(alpha - psi_t) + p + mod_tau(beta - psi_t))
        }
    };
    let lsl = {
        let c1 = (-alpha.sin(), alpha.cos());
        let c2 = (d - beta.sin(), beta.cos());
        let (ex, ey) = (c2.0 - c1.0, c2.1 - c1.1);
        let psi = ey.atan2(ex);
        let p = (ex * ex + ey * ey).sqrt();
        Some(mod_tau(psi - alpha) + p + mod_tau(beta - psi))
    };
    let lsr = {
        let c1 = (-alpha.sin(), alpha.cos());
        let c2 = (d + beta.sin(), -beta.cos());
        let (ex, ey) = (c2.0 - c1.0, c2.1 - c1.1);
        let dd = (ex * ex + ey * ey).sqrt();
        if dd < 2.0 {
            None
        } else {
            let p = (dd * dd - 4.0).sqrt();
            let psi_t = ey.atan2(ex) + 2.0f64.atan2(p);
            Some(mod_tau(psi_t - alpha) + p + mod_tau(psi_t - beta))
        }
    };

    [rsr, rsl, lsl, lsr].map(|w| w.map(|l| l * radius))
}

/// Shortest feasible word: `(index into WORD_NAMES, length)`.
pub fn csc_shortest(start: (f64, f64, f64), goal: (f64, f64, f64), radius: f64) -> (usize, f64) {
    let lengths = csc_word_lengths(start, goal, radius);
    lengths
        .iter()
        .enumerate()
        .filter_map(|(i, l)| l.map(|l| (i, l)))
        .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap().then(a.0.cmp(&b.0)))
        .expect("outer tangent words are always feasible")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn straight_line_case() {
        let [rsr, _, lsl, _] = csc_word_lengths((0.0, 0.0, 90.0), (10_000.0, 0.0, 90.0), 1000.0);
        assert!((rsr.unwrap() - 10_000.0).abs() < 1e-6);
        assert!((lsl.unwrap() - 10_000.0).abs() < 1e-6);
    }

    #[test]
    fn u_turn_behind_is_two_half_circles_plus_straight() {
        let [rsr, ..] = csc_word_lengths((0.0, 0.0, 0.0), (0.0, -4000.0, 0.0), 1000.0);
        assert!((rsr.unwrap() - (TAU * 1000.0 + 4000.0)).abs() < 1e-6);
    }

    #[test]
    fn head_on_reversal_prefers_inner_tangent() {
        let (idx, len) = csc_shortest((0.0, 0.0, 0.0), (0.0, 4000.0, 180.0), 1000.0);
        assert_eq!(WORD_NAMES[idx], "RSL");
        let expect = 1000.0 * (4.0 * std::f64::consts::PI / 3.0) + 2000.0 * 3.0f64.sqrt();
        assert!((len - expect).abs() < 1e-6, "got {len}, want {expect}");
    }
}
