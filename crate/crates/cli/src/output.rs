//! Output formatting shared by the subcommands.

use grover_core::TrajectoryPoint;

pub const TRAJECTORY_HEADER: &str =
    "j,marked_amp,unmarked_amp,c_scale,average_after_flip,success_prob";

/// 17 significant digits, enough to round-trip any double.
pub fn csv_f64(value: f64) -> String {
    format!("{value:.16e}")
}

pub fn trajectory_csv(points: &[TrajectoryPoint]) -> String {
    let mut out = String::with_capacity(128 * (points.len() + 1));
    out.push_str(TRAJECTORY_HEADER);
    out.push('\n');
    for p in points {
        out.push_str(&p.j.to_string());
        for value in [
            p.marked_amp,
            p.unmarked_amp,
            p.c_scale,
            p.average_after_flip,
            p.success_prob,
        ] {
            out.push(',');
            out.push_str(&csv_f64(value));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_round_trip() {
        for value in [0.0, 1.0, -0.5, 1.0 / 3.0, 0.6875, 1e-300, std::f64::consts::PI] {
            let text = csv_f64(value);
            let back: f64 = text.parse().unwrap();
            assert_eq!(back, value, "{text}");
        }
    }

    #[test]
    fn trajectory_table_shape() {
        let points = vec![
            TrajectoryPoint {
                j: 0,
                marked_amp: 0.5,
                unmarked_amp: 0.5,
                c_scale: 1.0,
                average_after_flip: 0.25,
                success_prob: 0.25,
            };
            3
        ];
        let csv = trajectory_csv(&points);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 4);
        assert_eq!(lines[0], TRAJECTORY_HEADER);
        assert_eq!(lines[1].split(',').count(), 6);
    }
}
