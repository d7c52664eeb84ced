//! CSV tables: header row, comma separated, LF line endings, reals rendered
//! with 17 significant digits.

use std::io::Write;

use crate::analysis::{BifurcationRow, LandscapeRow, LengthExperiment, LyapunovResult};
use crate::error::Result;
use crate::ga::EvolutionReport;
use crate::keyfile::format_decimal as real;
use crate::map::MapParams;

fn writer<W: Write>(w: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(w)
}

/// One row per generation.
pub fn write_generations<W: Write>(w: W, report: &EvolutionReport) -> Result<()> {
    let mut out = writer(w);
    out.write_record(["generation", "max_fitness", "mean_fitness", "best_so_far"])?;
    for g in &report.generations {
        out.write_record([
            g.index.to_string(),
            real(g.max_fitness),
            real(g.mean_fitness),
            real(g.best_so_far),
        ])?;
    }
    out.flush().map_err(csv::Error::from)?;
    Ok(())
}

/// Every evaluated genome of every generation.
pub fn write_population<W: Write>(w: W, report: &EvolutionReport) -> Result<()> {
    let mut out = writer(w);
    out.write_record(["generation", "member", "a", "b", "fitness"])?;
    for g in &report.generations {
        for (i, &(a, b, f)) in g.population.iter().enumerate() {
            out.write_record([
                g.index.to_string(),
                i.to_string(),
                real(a),
                real(b),
                real(f),
            ])?;
        }
    }
    out.flush().map_err(csv::Error::from)?;
    Ok(())
}

/// `x0`, `y0` carry the sweep's starting point on every row.
pub fn write_bifurcation<W: Write>(w: W, rows: &[BifurcationRow], x0: f64, y0: f64) -> Result<()> {
    let mut out = writer(w);
    out.write_record(["a", "b", "x", "x0", "y0"])?;
    let (x0, y0) = (real(x0), real(y0));
    for r in rows {
        out.write_record([&real(r.a), &real(r.b), &real(r.x), &x0, &y0])?;
    }
    out.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn write_lyapunov<W: Write>(w: W, rows: &[(MapParams, LyapunovResult)]) -> Result<()> {
    let mut out = writer(w);
    out.write_record([
        "a",
        "b",
        "exponent_1",
        "exponent_2",
        "iterations",
        "transient",
    ])?;
    for (p, r) in rows {
        out.write_record([
            real(p.a),
            real(p.b),
            real(r.exponent_1),
            real(r.exponent_2),
            r.iterations.to_string(),
            r.transient.to_string(),
        ])?;
    }
    out.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn write_landscape<W: Write>(w: W, rows: &[LandscapeRow]) -> Result<()> {
    let mut out = writer(w);
    out.write_record(["a", "b", "fitness"])?;
    for r in rows {
        out.write_record([real(r.a), real(r.b), real(r.fitness)])?;
    }
    out.flush().map_err(csv::Error::from)?;
    Ok(())
}

/// Per-run rows; the first three columns mirror the published length table.
pub fn write_lengths<W: Write>(w: W, exp: &LengthExperiment) -> Result<()> {
    let mut out = writer(w);
    out.write_record([
        "length",
        "generations",
        "max_fitness",
        "trial",
        "seed",
        "terminated_by",
    ])?;
    for r in &exp.runs {
        out.write_record([
            r.length.to_string(),
            r.generations.to_string(),
            real(r.max_fitness),
            r.trial.to_string(),
            r.seed.to_string(),
            r.terminated_by.as_str().to_string(),
        ])?;
    }
    out.flush().map_err(csv::Error::from)?;
    Ok(())
}

/// `(component, epsilon, trial, fraction)` rows.
pub fn write_sensitivity<W: Write>(w: W, rows: &[(String, f64, usize, f64)]) -> Result<()> {
    let mut out = writer(w);
    out.write_record(["component", "epsilon", "trial", "differing_fraction"])?;
    for (c, eps, trial, frac) in rows {
        out.write_record([c.clone(), real(*eps), trial.to_string(), real(*frac)])?;
    }
    out.flush().map_err(csv::Error::from)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn landscape_layout() {
        let mut buf = Vec::new();
        write_landscape(
            &mut buf,
            &[LandscapeRow {
                a: 1.5,
                b: 0.25,
                fitness: 100.0,
            }],
        )
        .unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "a,b,fitness\n1.5000000000000000e0,2.5000000000000000e-1,1.0000000000000000e2\n"
        );
    }
}
