//! Bench layout files: parse, validate, compile to staged mode maps, run.

use std::collections::BTreeSet;

use num_complex::Complex64;

use crate::error::{Error, ParseError, Result};
use crate::optics::{apply_to_slot, make_beam_splitter, make_phase, BeamSplitterKind, ModeMap};
use crate::state::Ket;

use super::ket::parse_ket_expr;

/// One pipeline stage: a mode map applied to one slot (0-based).
#[derive(Debug, Clone, PartialEq)]
pub struct Stage {
    pub slot: usize,
    pub map: ModeMap,
}

/// A validated interferometer layout.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchPlan {
    pub slots: usize,
    /// Mode alphabet per slot after all stages (declared modes plus every
    /// stage output).
    pub alphabets: Vec<BTreeSet<String>>,
    pub initial: Ket,
    pub stages: Vec<Stage>,
    /// Snapshot names with the number of stages applied before recording.
    pub snapshots: Vec<(String, usize)>,
    pub detectors: Vec<(usize, Vec<String>)>,
}

fn is_label(text: &str) -> bool {
    !text.is_empty()
        && text
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '+' | '\'' | '-'))
}

/// Tokens of a line with their 1-based char columns.
fn tokens_with_cols(line: &str) -> Vec<(&str, usize)> {
    let mut out = Vec::new();
    let mut col = 0usize;
    let mut start: Option<(usize, usize)> = None; // (byte, col)
    for (byte, c) in line.char_indices() {
        col += 1;
        if c.is_whitespace() {
            if let Some((s, sc)) = start.take() {
                out.push((&line[s..byte], sc));
            }
        } else if start.is_none() {
            start = Some((byte, col));
        }
    }
    if let Some((s, sc)) = start {
        out.push((&line[s..], sc));
    }
    out
}

struct Parser {
    slots: Option<usize>,
    alphabets: Vec<BTreeSet<String>>,
    initial: Option<Ket>,
    stages: Vec<Stage>,
    snapshots: Vec<(String, usize)>,
    detectors: Vec<(usize, Vec<String>, usize)>, // validated against final alphabets
    lines_seen: usize,
}

impl Parser {
    fn err(&self, line: usize, col: usize, message: impl Into<String>) -> ParseError {
        let _ = self;
        ParseError::new(line, col, message)
    }

    fn require_slots(&self, line: usize) -> std::result::Result<usize, ParseError> {
        self.slots
            .ok_or_else(|| self.err(line, 1, "`slots <n>` must come first"))
    }

    fn parse_slot_number(
        &self,
        text: &str,
        line: usize,
        col: usize,
    ) -> std::result::Result<usize, ParseError> {
        let slots = self.require_slots(line)?;
        let n: usize = text
            .parse()
            .map_err(|_| self.err(line, col, format!("invalid slot number \"{text}\"")))?;
        if n == 0 || n > slots {
            return Err(self.err(
                line,
                col,
                format!("slot {n} out of range 1..={slots}"),
            ));
        }
        Ok(n - 1)
    }

    fn kv<'a>(
        &self,
        tokens: &[(&'a str, usize)],
        idx: usize,
        key: &str,
        line: usize,
    ) -> std::result::Result<(&'a str, usize), ParseError> {
        let Some(&(tok, col)) = tokens.get(idx) else {
            return Err(self.err(line, 1, format!("missing {key}=... argument")));
        };
        let prefix = format!("{key}=");
        tok.strip_prefix(&prefix)
            .map(|v| (v, col + prefix.len()))
            .ok_or_else(|| self.err(line, col, format!("expected {key}=..., found \"{tok}\"")))
    }

    fn mode_pair(
        &self,
        text: &str,
        line: usize,
        col: usize,
    ) -> std::result::Result<(String, String), ParseError> {
        let parts: Vec<&str> = text.split(',').collect();
        if parts.len() != 2 || !parts.iter().all(|m| is_label(m)) {
            return Err(self.err(
                line,
                col,
                format!("expected two comma-separated mode labels, found \"{text}\""),
            ));
        }
        Ok((parts[0].to_string(), parts[1].to_string()))
    }

    fn check_inputs(
        &self,
        slot: usize,
        modes: &[&str],
        line: usize,
        col: usize,
    ) -> std::result::Result<(), ParseError> {
        for mode in modes {
            if !self.alphabets[slot].contains(*mode) {
                return Err(self.err(
                    line,
                    col,
                    format!("mode \"{mode}\" was never produced in slot {}", slot + 1),
                ));
            }
        }
        Ok(())
    }

    fn push_stage(&mut self, slot: usize, map: ModeMap) {
        for out in map.outputs() {
            self.alphabets[slot].insert(out.clone());
        }
        self.stages.push(Stage { slot, map });
    }

    fn complex_entry(
        &self,
        text: &str,
        line: usize,
        col: usize,
    ) -> std::result::Result<Complex64, ParseError> {
        let invalid =
            || self.err(line, col, format!("invalid matrix entry \"{text}\" (want re or re:im)"));
        match text.split_once(':') {
            Some((re, im)) => Ok(Complex64::new(
                re.parse().map_err(|_| invalid())?,
                im.parse().map_err(|_| invalid())?,
            )),
            None => Ok(Complex64::new(text.parse().map_err(|_| invalid())?, 0.0)),
        }
    }

    fn line(&mut self, line_no: usize, raw: &str) -> std::result::Result<(), ParseError> {
        self.lines_seen = line_no;
        let content = match raw.find('#') {
            Some(idx) => &raw[..idx],
            None => raw,
        };
        let tokens = tokens_with_cols(content);
        let Some(&(directive, dcol)) = tokens.first() else {
            return Ok(());
        };
        match directive {
            "slots" => {
                if self.slots.is_some() {
                    return Err(self.err(line_no, dcol, "duplicate slots directive"));
                }
                let Some(&(value, vcol)) = tokens.get(1) else {
                    return Err(self.err(line_no, dcol, "slots needs a count"));
                };
                let n: usize = value
                    .parse()
                    .map_err(|_| self.err(line_no, vcol, format!("invalid slot count \"{value}\"")))?;
                if n == 0 {
                    return Err(self.err(line_no, vcol, "slot count must be positive"));
                }
                self.slots = Some(n);
                self.alphabets = vec![BTreeSet::new(); n];
            }
            "slot" => {
                let Some(&(num, ncol)) = tokens.get(1) else {
                    return Err(self.err(line_no, dcol, "slot needs a number"));
                };
                let slot = self.parse_slot_number(num, line_no, ncol)?;
                match tokens.get(2) {
                    Some(&("modes", _)) => {}
                    _ => return Err(self.err(line_no, dcol, "expected `slot <n> modes <labels...>`")),
                }
                if tokens.len() < 4 {
                    return Err(self.err(line_no, dcol, "slot declares no modes"));
                }
                for &(mode, mcol) in &tokens[3..] {
                    if !is_label(mode) {
                        return Err(self.err(line_no, mcol, format!("invalid mode label \"{mode}\"")));
                    }
                    self.alphabets[slot].insert(mode.to_string());
                }
            }
            "state" => {
                let slots = self.require_slots(line_no)?;
                if self.initial.is_some() {
                    return Err(self.err(line_no, dcol, "duplicate state directive"));
                }
                let Some(&(_, first_col)) = tokens.get(1) else {
                    return Err(self.err(line_no, dcol, "state needs a ket expression"));
                };
                let expr_text: String = content.chars().skip(first_col - 1).collect();
                let expr = parse_ket_expr(&expr_text).map_err(|e| {
                    let col = if e.line == 1 { first_col + e.col - 1 } else { e.col };
                    self.err(line_no, col, e.message)
                })?;
                let ket = match expr.to_ket() {
                    Ok(k) => k,
                    Err(Error::Parse(e)) => {
                        let col = if e.line == 1 { first_col + e.col - 1 } else { e.col };
                        return Err(self.err(line_no, col, e.message));
                    }
                    Err(other) => return Err(self.err(line_no, first_col, other.to_string())),
                };
                if ket.slots() != slots {
                    return Err(self.err(
                        line_no,
                        first_col,
                        format!("state has {} slots but the plan declares {slots}", ket.slots()),
                    ));
                }
                for (label, _) in ket.terms() {
                    for (slot, mode) in label.modes().iter().enumerate() {
                        if !self.alphabets[slot].contains(mode) {
                            return Err(self.err(
                                line_no,
                                first_col,
                                format!("undeclared mode \"{mode}\" in slot {}", slot + 1),
                            ));
                        }
                    }
                }
                self.initial = Some(ket);
            }
            "stage" => {
                if self.initial.is_none() {
                    return Err(self.err(line_no, dcol, "stage before state directive"));
                }
                let (slot_text, scol) = self.kv(&tokens, 1, "slot", line_no)?;
                let slot = self.parse_slot_number(slot_text, line_no, scol)?;
                let Some(&(kind, kcol)) = tokens.get(2) else {
                    return Err(self.err(line_no, dcol, "stage needs a kind (bs, phase, unitary)"));
                };
                match kind {
                    "bs" => {
                        let (kind_text, kvcol) = self.kv(&tokens, 3, "kind", line_no)?;
                        let bs_kind = match kind_text {
                            "splitter" => BeamSplitterKind::Splitter,
                            "recombiner" => BeamSplitterKind::Recombiner,
                            other => {
                                return Err(self.err(
                                    line_no,
                                    kvcol,
                                    format!("unknown beam-splitter kind \"{other}\""),
                                ))
                            }
                        };
                        let (in_text, icol) = self.kv(&tokens, 4, "in", line_no)?;
                        let (out_text, ocol) = self.kv(&tokens, 5, "out", line_no)?;
                        let ins = self.mode_pair(in_text, line_no, icol)?;
                        let outs = self.mode_pair(out_text, line_no, ocol)?;
                        self.check_inputs(slot, &[&ins.0, &ins.1], line_no, icol)?;
                        let map = make_beam_splitter(bs_kind, (&ins.0, &ins.1), (&outs.0, &outs.1))
                            .map_err(|e| self.err(line_no, ocol, e.to_string()))?;
                        self.push_stage(slot, map);
                    }
                    "phase" => {
                        let (mode, mcol) = self.kv(&tokens, 3, "mode", line_no)?;
                        if !is_label(mode) {
                            return Err(self.err(line_no, mcol, format!("invalid mode label \"{mode}\"")));
                        }
                        self.check_inputs(slot, &[mode], line_no, mcol)?;
                        let (phi_text, pcol) = self.kv(&tokens, 4, "phi", line_no)?;
                        let phi = match phi_text {
                            "pi" => std::f64::consts::PI,
                            "-pi" => -std::f64::consts::PI,
                            other => other.parse().map_err(|_| {
                                self.err(line_no, pcol, format!("invalid phase \"{other}\""))
                            })?,
                        };
                        self.push_stage(slot, make_phase(mode, phi));
                    }
                    "unitary" => {
                        let (in_text, icol) = self.kv(&tokens, 3, "in", line_no)?;
                        let (out_text, ocol) = self.kv(&tokens, 4, "out", line_no)?;
                        let (m_text, mcol) = self.kv(&tokens, 5, "matrix", line_no)?;
                        let ins = self.mode_pair(in_text, line_no, icol)?;
                        let outs = self.mode_pair(out_text, line_no, ocol)?;
                        self.check_inputs(slot, &[&ins.0, &ins.1], line_no, icol)?;
                        let rows: Vec<&str> = m_text.split(';').collect();
                        if rows.len() != 2 {
                            return Err(self.err(line_no, mcol, "matrix needs two ;-separated rows"));
                        }
                        let mut matrix = Vec::with_capacity(2);
                        for row in rows {
                            let entries: Vec<&str> = row.split(',').collect();
                            if entries.len() != 2 {
                                return Err(self.err(
                                    line_no,
                                    mcol,
                                    "each matrix row needs two ,-separated entries",
                                ));
                            }
                            matrix.push(vec![
                                self.complex_entry(entries[0], line_no, mcol)?,
                                self.complex_entry(entries[1], line_no, mcol)?,
                            ]);
                        }
                        let map = ModeMap::new(
                            vec![ins.0, ins.1],
                            vec![outs.0, outs.1],
                            matrix,
                        )
                        .map_err(|e| self.err(line_no, mcol, e.to_string()))?;
                        self.push_stage(slot, map);
                    }
                    other => {
                        return Err(self.err(
                            line_no,
                            kcol,
                            format!("unknown stage kind \"{other}\""),
                        ))
                    }
                }
            }
            "snapshot" => {
                let Some(&(name, ncol)) = tokens.get(1) else {
                    return Err(self.err(line_no, dcol, "snapshot needs a name"));
                };
                if name == "final" {
                    return Err(self.err(line_no, ncol, "snapshot name \"final\" is reserved"));
                }
                if self.snapshots.iter().any(|(n, _)| n == name) {
                    return Err(self.err(line_no, ncol, format!("duplicate snapshot \"{name}\"")));
                }
                self.snapshots.push((name.to_string(), self.stages.len()));
            }
            "detect" => {
                let Some(&(num, ncol)) = tokens.get(1) else {
                    return Err(self.err(line_no, dcol, "detect needs slot=<n>"));
                };
                let slot_text = num
                    .strip_prefix("slot=")
                    .ok_or_else(|| self.err(line_no, ncol, "detect needs slot=<n>"))?;
                let slot = self.parse_slot_number(slot_text, line_no, ncol + 5)?;
                if tokens.len() < 3 {
                    return Err(self.err(line_no, dcol, "detect lists no modes"));
                }
                let modes: Vec<String> = tokens[2..]
                    .iter()
                    .map(|&(m, _)| m.to_string())
                    .collect();
                for (&(mode, mcol), _) in tokens[2..].iter().zip(&modes) {
                    if !is_label(mode) {
                        return Err(self.err(line_no, mcol, format!("invalid mode label \"{mode}\"")));
                    }
                }
                self.detectors.push((slot, modes, line_no));
            }
            other => {
                return Err(self.err(line_no, dcol, format!("unknown directive \"{other}\"")));
            }
        }
        Ok(())
    }

    fn finish(self) -> std::result::Result<BenchPlan, ParseError> {
        let slots = self
            .slots
            .ok_or_else(|| ParseError::new(self.lines_seen.max(1), 1, "missing `slots` directive"))?;
        let initial = self.initial.clone().ok_or_else(|| {
            ParseError::new(self.lines_seen.max(1), 1, "missing `state` directive")
        })?;
        for (slot, modes, line) in &self.detectors {
            for mode in modes {
                if !self.alphabets[*slot].contains(mode) {
                    return Err(ParseError::new(
                        *line,
                        1,
                        format!(
                            "detector mode \"{mode}\" does not exist in slot {} after the final stage",
                            slot + 1
                        ),
                    ));
                }
            }
        }
        Ok(BenchPlan {
            slots,
            alphabets: self.alphabets,
            initial,
            stages: self.stages,
            snapshots: self.snapshots,
            detectors: self
                .detectors
                .into_iter()
                .map(|(slot, modes, _)| (slot, modes))
                .collect(),
        })
    }
}

/// Parse and validate a bench layout.
pub fn parse_bench(text: &str) -> Result<BenchPlan> {
    let mut parser = Parser {
        slots: None,
        alphabets: Vec::new(),
        initial: None,
        stages: Vec::new(),
        snapshots: Vec::new(),
        detectors: Vec::new(),
        lines_seen: 0,
    };
    for (idx, line) in text.lines().enumerate() {
        parser.line(idx + 1, line)?;
    }
    Ok(parser.finish()?)
}

/// Evolve the initial state stage by stage, recording snapshots where the
/// plan placed them plus the end state under the reserved name "final".
pub fn compile_and_run(plan: &BenchPlan) -> Result<Vec<(String, Ket)>> {
    let mut state = plan.initial.clone();
    let mut out = Vec::new();
    for (applied, stage) in plan.stages.iter().enumerate() {
        for (name, at) in &plan.snapshots {
            if *at == applied {
                out.push((name.clone(), state.clone()));
            }
        }
        state = apply_to_slot(&state, stage.slot, &stage.map)?;
    }
    for (name, at) in &plan.snapshots {
        if *at == plan.stages.len() {
            out.push((name.clone(), state.clone()));
        }
    }
    out.push(("final".to_string(), state));
    Ok(out)
}
