//! CSV and JSON serialization of scenario results.

use std::io::{self, Write};

use serde::Serialize;

use crate::scenarios::{RunResult, ScenarioResult, Snapshot};

pub const CSV_HEADER: &str = "omega_t,alpha,n_qq,n_qq_r,concurrence,purity_qq,leakage";

/// 12 significant digits, scientific notation, `-0` printed as `0`.
pub fn format_value(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.11e}")
}

/// Writes all records, sorted by `(alpha, omega_t)`.
pub fn emit_csv<W: Write>(result: &ScenarioResult, out: &mut W) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    let mut runs: Vec<&RunResult> = result.runs.iter().collect();
    runs.sort_by(|a, b| a.alpha.total_cmp(&b.alpha));
    for run in runs {
        let mut recs = run.records.clone();
        recs.sort_by(|a, b| a.omega_t.total_cmp(&b.omega_t));
        for r in recs {
            let fields = [r.omega_t, run.alpha, r.n_qq, r.n_qq_r, r.concurrence, r.purity_qq, r.leakage];
            let line: Vec<String> = fields.iter().map(|&v| format_value(v)).collect();
            writeln!(out, "{}", line.join(","))?;
        }
    }
    Ok(())
}

pub fn csv_string(result: &ScenarioResult) -> String {
    let mut buf = Vec::new();
    emit_csv(result, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("csv is ascii")
}

#[derive(Debug, Serialize)]
struct SnapshotJson {
    omega_t: f64,
    alpha: f64,
    basis: [&'static str; 4],
    real: Vec<Vec<f64>>,
    imag: Vec<Vec<f64>>,
    negativity: f64,
}

fn snapshot_json(s: &Snapshot) -> SnapshotJson {
    let m = s.rho_qq.matrix();
    let part = |f: fn(&crate::linalg::C64) -> f64| (0..4).map(|i| (0..4).map(|j| f(&m[(i, j)])).collect()).collect();
    SnapshotJson {
        omega_t: s.omega_t,
        alpha: s.alpha,
        basis: ["ee", "eg", "ge", "gg"],
        real: part(|z| z.re),
        imag: part(|z| z.im),
        negativity: s.negativity,
    }
}

pub fn emit_snapshot<W: Write>(snapshot: &Snapshot, out: &mut W) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, &snapshot_json(snapshot))?;
    writeln!(out)
}

/// Snapshot file names: `{name}_snapshot.json` for a single snapshot,
/// `{name}_snapshot_{k}.json` otherwise.
pub fn snapshot_file_names(name: &str, count: usize) -> Vec<String> {
    if count == 1 {
        vec![format!("{name}_snapshot.json")]
    } else {
        (0..count).map(|k| format!("{name}_snapshot_{k}.json")).collect()
    }
}

/// All snapshots of a result, in run order then time order.
pub fn snapshots(result: &ScenarioResult) -> Vec<&Snapshot> {
    result.runs.iter().flat_map(|r| r.snapshots.iter()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entanglement::DensityMatrix;
    use crate::linalg::ComplexMatrix;
    use crate::model::Nonlinearity;
    use crate::scenarios::{Record, Summary};

    fn result() -> ScenarioResult {
        let rec = |t: f64| Record {
            omega_t: t,
            n_qq: 0.25,
            n_qq_r: -0.0,
            concurrence: 0.5,
            purity_qq: 1.0,
            leakage: 1e-20,
        };
        let run = |alpha: f64| RunResult {
            alpha,
            nonlinearity: Nonlinearity::Cosine { alpha },
            fock_cutoff: 4,
            records: vec![rec(1.0), rec(0.0)],
            snapshots: vec![],
            summary: Summary { max_n_qq: 0.25, argmax_omega_t: 0.0 },
            damping: None,
        };
        ScenarioResult { name: "t".into(), runs: vec![run(0.5), run(0.1)] }
    }

    #[test]
    fn csv_layout() {
        let s = csv_string(&result());
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines[0], CSV_HEADER);
        assert_eq!(lines.len(), 5);
        assert_eq!(
            lines[1],
            "0.00000000000e0,1.00000000000e-1,2.50000000000e-1,0.00000000000e0,5.00000000000e-1,1.00000000000e0,1.00000000000e-20"
        );
        assert!(lines[2].starts_with("1.00000000000e0,1.0"));
        assert!(lines[3].starts_with("0.00000000000e0,5.0"));
    }

    #[test]
    fn snapshot_layout() {
        let m = ComplexMatrix::from_real_diagonal(&[0.0, 0.5, 0.5, 0.0]);
        let snap = Snapshot {
            omega_t: 111.0,
            alpha: 0.0,
            rho_qq: DensityMatrix::new(m, vec![2, 2]).unwrap(),
            negativity: 0.0,
        };
        let mut buf = Vec::new();
        emit_snapshot(&snap, &mut buf).unwrap();
        let v: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        assert_eq!(v["omega_t"], 111.0);
        assert_eq!(v["real"][1][1], 0.5);
        assert_eq!(v["imag"][3].as_array().unwrap().len(), 4);
        assert_eq!(v["basis"][1], "eg");
        assert_eq!(snapshot_file_names("fig7", 1), vec!["fig7_snapshot.json"]);
        assert_eq!(snapshot_file_names("x", 2)[1], "x_snapshot_1.json");
    }
}
