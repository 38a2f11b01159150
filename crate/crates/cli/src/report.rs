use std::io::Write;
use std::time::Duration;

use anyhow::Result;
use balanced_biclique::{Algorithm, CountReport, Side};
use clap::ValueEnum;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Inf,
    Error,
}

/// One benchmark record. Field order is the CSV column order.
#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub dataset: String,
    pub algo: Algorithm,
    pub p: usize,
    pub q: usize,
    /// Decimal string; 128-bit counts do not fit JSON numbers.
    pub count: Option<String>,
    pub wedges: Option<u64>,
    pub subsets: Option<u64>,
    pub intersections: Option<u64>,
    pub bicliques_materialized: Option<u64>,
    pub wall_ms: Option<f64>,
    pub peak_mem_bytes: Option<u64>,
    pub status: Status,
}

fn millis(d: Duration) -> f64 {
    (d.as_secs_f64() * 1e6).round() / 1e3
}

impl Row {
    pub fn from_report(dataset: &str, r: &CountReport) -> Row {
        Row {
            dataset: dataset.to_owned(),
            algo: r.algorithm,
            p: r.p,
            q: r.q,
            count: Some(r.count.to_string()),
            wedges: Some(r.work.wedges),
            subsets: Some(r.work.subsets),
            intersections: Some(r.work.intersections),
            bicliques_materialized: Some(r.work.bicliques_materialized),
            wall_ms: Some(millis(r.wall)),
            peak_mem_bytes: Some(r.peak_mem_bytes),
            status: Status::Ok,
        }
    }

    /// A row for a run that produced no count; INF rows record the limit as their wall time.
    pub fn without_result(
        dataset: &str,
        algo: Algorithm,
        p: usize,
        q: usize,
        status: Status,
        limit: Option<Duration>,
    ) -> Row {
        Row {
            dataset: dataset.to_owned(),
            algo,
            p,
            q,
            count: None,
            wedges: None,
            subsets: None,
            intersections: None,
            bicliques_materialized: None,
            wall_ms: limit.map(millis),
            peak_mem_bytes: None,
            status,
        }
    }
}

/// Streams rows as CSV (header first) or JSON Lines, flushing after each row.
pub enum RowWriter<W: Write> {
    Csv(Box<csv::Writer<W>>),
    Json(W),
}

impl<W: Write> RowWriter<W> {
    pub fn new(out: W, format: Output) -> Result<Self> {
        Ok(match format {
            Output::Json => RowWriter::Json(out),
            Output::Csv | Output::Text => RowWriter::Csv(Box::new(csv::Writer::from_writer(out))),
        })
    }

    pub fn write(&mut self, row: &Row) -> Result<()> {
        match self {
            RowWriter::Csv(w) => {
                w.serialize(row)?;
                w.flush()?;
            }
            RowWriter::Json(w) => {
                serde_json::to_writer(&mut *w, row)?;
                writeln!(w)?;
                w.flush()?;
            }
        }
        Ok(())
    }

    pub fn finish(self) -> Result<()> {
        match self {
            RowWriter::Csv(mut w) => w.flush()?,
            RowWriter::Json(mut w) => w.flush()?,
        }
        Ok(())
    }
}

pub fn write_text<W: Write>(mut out: W, dataset: &str, r: &CountReport, verified: Option<bool>) -> Result<()> {
    writeln!(out, "dataset: {dataset}")?;
    writeln!(out, "algorithm: {}", r.algorithm)?;
    writeln!(out, "p: {}  q: {}", r.p, r.q)?;
    let swap = if r.anchor_side == Side::Right {
        " (p counts left vertices, q right; roles swapped for anchoring)"
    } else {
        ""
    };
    writeln!(out, "anchor side: {}{swap}", r.anchor_side)?;
    writeln!(out, "balanced bicliques: {}", r.count)?;
    let w = &r.work;
    match r.algorithm {
        Algorithm::Bbwc => writeln!(out, "wedges: {}", w.wedges)?,
        Algorithm::Bbvp => {
            writeln!(out, "candidate sets: {}", w.candidate_sets)?;
            writeln!(out, "subsets: {}", w.subsets)?;
            writeln!(out, "intersections: {}", w.intersections)?;
        }
        Algorithm::Baseline => {
            writeln!(out, "intersections: {}", w.intersections)?;
            writeln!(
                out,
                "bicliques materialized: {} ({} rejected)",
                w.bicliques_materialized, w.bicliques_rejected
            )?;
        }
        Algorithm::Oracle => writeln!(
            out,
            "bicliques materialized: {} ({} rejected)",
            w.bicliques_materialized, w.bicliques_rejected
        )?,
    }
    writeln!(out, "wall: {:.3} ms", millis(r.wall))?;
    let method = serde_json::to_value(r.mem_method)?;
    writeln!(
        out,
        "peak memory: {} bytes ({})",
        r.peak_mem_bytes,
        method.as_str().unwrap_or("?")
    )?;
    if let Some(ok) = verified {
        writeln!(out, "verified against oracle: {}", if ok { "yes" } else { "no" })?;
    }
    Ok(())
}
