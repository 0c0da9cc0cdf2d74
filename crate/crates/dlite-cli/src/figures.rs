//! Figure-data emission: each command writes the CSV behind one plot.
//!
//! - `pq-surface`: `dl(p, q)` over the unit square
//! - `certainty-binary`: measures for `(p1, 1-p1) → (1, 0)`
//! - `certainty-equiprobable`: measures for `equiprobable(m) → certainty(m)`,
//!   `m` log-spaced in `[2, 10^4]`
//! - `swap-binary`: measures for `(p1, 1-p1) → (1-p1, p1)`
//! - `swap-ternary`: measures for `(p1, r, r) → (r, p1, r)` with
//!   `r = (1-p1)/2`, the first two probabilities swapped
//! - `surface-3d-certainty`: `DL` for `(p1, p2, p3) → (1, 0, 0)` over the
//!   probability simplex
//! - `surface-3d-swap`: `DL` for `(p1, p2, p3) → (p2, p1, p3)`
//!
//! Comparison figures carry `dl`, `entropy_delta`, `kl`, and `js` columns.
//! The KL column is directed: reduction-to-certainty figures report
//! `KL(Q‖P)` (the direction that diverges as a probability vanishes, header
//! `kl_qp`), swap figures report `KL(P‖Q)` (header `kl_pq`).
//!
//! Output is deterministic: fixed iteration order, [`format_value`]
//! number formatting, LF line endings.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use anyhow::Context;
use clap::ValueEnum;
use dlite::{baselines, measures, DiscreteDistribution};

use crate::format_value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FigureKind {
    #[value(name = "pq-surface")]
    PqSurface,
    #[value(name = "certainty-binary")]
    CertaintyBinary,
    #[value(name = "certainty-equiprobable")]
    CertaintyEquiprobable,
    #[value(name = "swap-binary")]
    SwapBinary,
    #[value(name = "swap-ternary")]
    SwapTernary,
    #[value(name = "surface-3d-certainty")]
    Surface3dCertainty,
    #[value(name = "surface-3d-swap")]
    Surface3dSwap,
}

impl FigureKind {
    pub fn name(self) -> &'static str {
        match self {
            Self::PqSurface => "pq-surface",
            Self::CertaintyBinary => "certainty-binary",
            Self::CertaintyEquiprobable => "certainty-equiprobable",
            Self::SwapBinary => "swap-binary",
            Self::SwapTernary => "swap-ternary",
            Self::Surface3dCertainty => "surface-3d-certainty",
            Self::Surface3dSwap => "surface-3d-swap",
        }
    }

    /// Grid points per axis; the log-spaced `m` sweep wants fewer.
    pub fn default_steps(self) -> usize {
        match self {
            Self::CertaintyEquiprobable => 50,
            _ => 101,
        }
    }
}

/// One axis of a sweep: `steps` evenly spaced values on `[start, stop]`.
#[derive(Debug, Clone)]
pub struct GridAxis {
    pub name: &'static str,
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
}

impl GridAxis {
    pub fn new(name: &'static str, start: f64, stop: f64, steps: usize) -> anyhow::Result<Self> {
        anyhow::ensure!(steps >= 2, "axis {name}: steps must be at least 2");
        anyhow::ensure!(
            start.is_finite() && stop.is_finite() && start < stop,
            "axis {name}: need start < stop"
        );
        Ok(Self {
            name,
            start,
            stop,
            steps,
        })
    }

    /// A probability axis, constrained to `[0, 1]`.
    pub fn probability(name: &'static str, steps: usize) -> anyhow::Result<Self> {
        let axis = Self::new(name, 0.0, 1.0, steps)?;
        anyhow::ensure!(
            axis.start >= 0.0 && axis.stop <= 1.0,
            "axis {name}: probability range must stay in [0, 1]"
        );
        Ok(axis)
    }

    pub fn values(&self) -> Vec<f64> {
        (0..self.steps)
            .map(|i| {
                let t = i as f64 / (self.steps - 1) as f64;
                self.start + t * (self.stop - self.start)
            })
            .collect()
    }
}

/// Sweep description for one figure: axes plus the output path.
#[derive(Debug, Clone)]
pub struct GridSpec {
    pub axes: Vec<GridAxis>,
    pub output_path: PathBuf,
}

pub fn build_grid(kind: FigureKind, steps: usize, output_path: PathBuf) -> anyhow::Result<GridSpec> {
    let axes = match kind {
        FigureKind::PqSurface => vec![
            GridAxis::probability("p", steps)?,
            GridAxis::probability("q", steps)?,
        ],
        FigureKind::CertaintyBinary | FigureKind::SwapBinary | FigureKind::SwapTernary => {
            vec![GridAxis::probability("p1", steps)?]
        }
        FigureKind::CertaintyEquiprobable => vec![GridAxis::new("m", 2.0, 10_000.0, steps)?],
        FigureKind::Surface3dCertainty | FigureKind::Surface3dSwap => vec![
            GridAxis::probability("p1", steps)?,
            GridAxis::probability("p2", steps)?,
        ],
    };
    Ok(GridSpec { axes, output_path })
}

/// Run a figure command end to end; returns the path written.
pub fn cmd_figure(
    kind: FigureKind,
    steps: Option<usize>,
    out: Option<PathBuf>,
) -> anyhow::Result<PathBuf> {
    let steps = steps.unwrap_or_else(|| kind.default_steps());
    let path = out.unwrap_or_else(|| PathBuf::from(format!("{}.csv", kind.name())));
    let grid = build_grid(kind, steps, path.clone())?;
    let file = File::create(&path)
        .with_context(|| format!("cannot write output file {}", path.display()))?;
    let mut writer = BufWriter::new(file);
    write_figure(kind, &grid, &mut writer)?;
    writer.flush()?;
    Ok(path)
}

/// Render one figure's CSV into `w`. Values come straight from the library
/// calls, one row per grid point, header first.
pub fn write_figure<W: Write>(kind: FigureKind, grid: &GridSpec, w: &mut W) -> anyhow::Result<()> {
    match kind {
        FigureKind::PqSurface => pq_surface(grid, w),
        FigureKind::CertaintyBinary => certainty_binary(grid, w),
        FigureKind::CertaintyEquiprobable => certainty_equiprobable(grid, w),
        FigureKind::SwapBinary => swap_binary(grid, w),
        FigureKind::SwapTernary => swap_ternary(grid, w),
        FigureKind::Surface3dCertainty => surface_3d(grid, w, false),
        FigureKind::Surface3dSwap => surface_3d(grid, w, true),
    }
}

/// dl, entropy_delta, directed kl, js for one pair.
fn comparison_columns(
    p: &DiscreteDistribution,
    q: &DiscreteDistribution,
    kl_from_q: bool,
) -> anyhow::Result<[f64; 4]> {
    let dl = measures::dl_total(p, q)?.dl_total;
    let entropy_delta = baselines::entropy_delta(p, q)?;
    let kl = if kl_from_q {
        baselines::kl_divergence(q, p)?
    } else {
        baselines::kl_divergence(p, q)?
    };
    let js = baselines::js_divergence(p, q)?;
    Ok([dl, entropy_delta, kl, js])
}

fn write_comparison_row<W: Write>(w: &mut W, x: &str, cols: [f64; 4]) -> anyhow::Result<()> {
    writeln!(
        w,
        "{},{},{},{},{}",
        x,
        format_value(cols[0]),
        format_value(cols[1]),
        format_value(cols[2]),
        format_value(cols[3]),
    )?;
    Ok(())
}

fn pq_surface<W: Write>(grid: &GridSpec, w: &mut W) -> anyhow::Result<()> {
    writeln!(w, "p,q,dl")?;
    for p in grid.axes[0].values() {
        for q in grid.axes[1].values() {
            let dl = measures::dl_pair(p, q)?;
            writeln!(w, "{},{},{}", format_value(p), format_value(q), format_value(dl))?;
        }
    }
    Ok(())
}

fn certainty_binary<W: Write>(grid: &GridSpec, w: &mut W) -> anyhow::Result<()> {
    writeln!(w, "p1,dl,entropy_delta,kl_qp,js")?;
    let certainty = DiscreteDistribution::certainty(2);
    for p1 in grid.axes[0].values() {
        let p = DiscreteDistribution::new(vec![p1, 1.0 - p1])?;
        let cols = comparison_columns(&p, &certainty, true)?;
        write_comparison_row(w, &format_value(p1), cols)?;
    }
    Ok(())
}

fn certainty_equiprobable<W: Write>(grid: &GridSpec, w: &mut W) -> anyhow::Result<()> {
    writeln!(w, "m,dl,entropy_delta,kl_qp,js")?;
    let axis = &grid.axes[0];
    for m in log_spaced_integers(axis.start, axis.stop, axis.steps) {
        let p = DiscreteDistribution::equiprobable(m as usize);
        let q = DiscreteDistribution::certainty(m as usize);
        let cols = comparison_columns(&p, &q, true)?;
        write_comparison_row(w, &m.to_string(), cols)?;
    }
    Ok(())
}

fn swap_binary<W: Write>(grid: &GridSpec, w: &mut W) -> anyhow::Result<()> {
    writeln!(w, "p1,dl,entropy_delta,kl_pq,js")?;
    for p1 in grid.axes[0].values() {
        let p = DiscreteDistribution::new(vec![p1, 1.0 - p1])?;
        let q = DiscreteDistribution::new(vec![1.0 - p1, p1])?;
        let cols = comparison_columns(&p, &q, false)?;
        write_comparison_row(w, &format_value(p1), cols)?;
    }
    Ok(())
}

fn swap_ternary<W: Write>(grid: &GridSpec, w: &mut W) -> anyhow::Result<()> {
    writeln!(w, "p1,dl,entropy_delta,kl_pq,js")?;
    for p1 in grid.axes[0].values() {
        let rest = (1.0 - p1) / 2.0;
        let p = DiscreteDistribution::new(vec![p1, rest, rest])?;
        let q = DiscreteDistribution::new(vec![rest, p1, rest])?;
        let cols = comparison_columns(&p, &q, false)?;
        write_comparison_row(w, &format_value(p1), cols)?;
    }
    Ok(())
}

fn surface_3d<W: Write>(grid: &GridSpec, w: &mut W, swap: bool) -> anyhow::Result<()> {
    writeln!(w, "p1,p2,dl")?;
    for p1 in grid.axes[0].values() {
        for p2 in grid.axes[1].values() {
            if p1 + p2 > 1.0 + 1e-12 {
                continue;
            }
            let p3 = (1.0 - p1 - p2).max(0.0);
            let p = DiscreteDistribution::new(vec![p1, p2, p3])?;
            let q = if swap {
                DiscreteDistribution::new(vec![p2, p1, p3])?
            } else {
                DiscreteDistribution::certainty(3)
            };
            let dl = measures::dl_total(&p, &q)?.dl_total;
            writeln!(
                w,
                "{},{},{}",
                format_value(p1),
                format_value(p2),
                format_value(dl)
            )?;
        }
    }
    Ok(())
}

/// Log-spaced integers in `[start, stop]`, strictly increasing after
/// rounding collapses neighbours.
fn log_spaced_integers(start: f64, stop: f64, steps: usize) -> Vec<u64> {
    let (ls, le) = (start.ln(), stop.ln());
    let mut out: Vec<u64> = Vec::with_capacity(steps);
    for i in 0..steps {
        let t = i as f64 / (steps - 1) as f64;
        let m = (ls + t * (le - ls)).exp().round() as u64;
        if out.last() != Some(&m) {
            out.push(m);
        }
    }
    out
}
