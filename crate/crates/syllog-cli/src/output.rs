//! Report shapes and rendering. The JSON field names are a stable contract;
//! the human text is not.

use serde::Serialize;
use syllog::semantics::{KripkeModel, SearchBounds, Verdict, VerdictStatus};
use syllog::Mnemonic;

#[derive(Serialize)]
pub struct CheckReport {
    pub command: &'static str,
    pub input: String,
    /// Canonical text of the checked formula.
    pub formula: String,
    pub name: Option<Mnemonic>,
    pub status: VerdictStatus,
    pub countermodel: Option<KripkeModel>,
    pub bounds: SearchBounds,
    pub elapsed_ms: u128,
}

impl CheckReport {
    pub fn new(
        input: &str,
        formula: String,
        name: Option<Mnemonic>,
        verdict: Verdict,
        elapsed_ms: u128,
    ) -> Self {
        CheckReport {
            command: "check",
            input: input.to_string(),
            formula,
            name,
            status: verdict.status,
            countermodel: verdict.countermodel,
            bounds: verdict.bounds,
            elapsed_ms,
        }
    }
}

pub fn status_word(status: VerdictStatus) -> &'static str {
    match status {
        VerdictStatus::ValidUpToBound => "valid_up_to_bound",
        VerdictStatus::Invalid => "invalid",
    }
}

pub fn render_bounds(b: &SearchBounds) -> String {
    format!(
        "max_domain={} max_worlds={} rigid={}",
        b.max_domain, b.max_worlds, b.rigid
    )
}

pub fn render_model(m: &KripkeModel) -> String {
    let mut out = format!(
        "countermodel (domain {}, {} world{}, actual world {}):\n",
        m.domain_size,
        m.worlds.len(),
        if m.worlds.len() == 1 { "" } else { "s" },
        m.actual + 1
    );
    for (i, world) in m.worlds.iter().enumerate() {
        let marker = if i == m.actual { "*" } else { "" };
        let exts: Vec<String> = world
            .extensions
            .iter()
            .map(|(atom, members)| {
                let elems: Vec<String> = members.iter().map(u32::to_string).collect();
                format!("{atom}={{{}}}", elems.join(","))
            })
            .collect();
        out.push_str(&format!("  world {}{marker}: {}\n", i + 1, exts.join(" ")));
    }
    out
}

pub fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("reports serialize"));
}
