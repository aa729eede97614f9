//! Deterministic reports: a machine JSON mirror plus human-readable text.
//! Wall-clock timings are deliberately kept out of the JSON so that repeated
//! runs are byte-identical; they are printed to stderr on demand.

use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct Caps {
    pub max_pairs: usize,
    pub max_degree: u32,
}

#[derive(Debug, Serialize)]
pub struct GenEntry {
    pub name: String,
    pub tag: String,
    pub witness: String,
}

#[derive(Debug, Serialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum OpResult {
    Contract {
        generators: Vec<GenEntry>,
        relations: Vec<String>,
    },
    Verify {
        property: String,
        verdict: String,
        detail: Vec<String>,
    },
    Error {
        message: String,
    },
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub job: String,
    pub field: String,
    pub caps: Caps,
    pub results: Vec<OpResult>,
    pub ok: bool,
}

#[derive(Debug, Serialize)]
pub struct Bundle {
    pub reports: Vec<Report>,
    pub ok: bool,
}

impl Report {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("job {} over {}\n", self.job, self.field));
        for r in &self.results {
            match r {
                OpResult::Contract {
                    generators,
                    relations,
                } => {
                    out.push_str(&format!(
                        "contract: {} generator(s), {} relation(s)\n",
                        generators.len(),
                        relations.len()
                    ));
                    for g in generators {
                        out.push_str(&format!(
                            "  gen {} ({})  <-  {}\n",
                            g.name, g.tag, g.witness
                        ));
                    }
                    if relations.is_empty() {
                        out.push_str("  relations: none\n");
                    }
                    for rel in relations {
                        out.push_str(&format!("  rel {rel}\n"));
                    }
                }
                OpResult::Verify {
                    property,
                    verdict,
                    detail,
                } => {
                    out.push_str(&format!("verify {property}: {}\n", verdict.to_uppercase()));
                    for d in detail {
                        out.push_str(&format!("  {d}\n"));
                    }
                }
                OpResult::Error { message } => {
                    out.push_str(&format!("error: {message}\n"));
                }
            }
        }
        out.push_str(&format!(
            "result: {}\n",
            if self.ok { "OK" } else { "FAILED" }
        ));
        out
    }
}

impl Bundle {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for (i, r) in self.reports.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            out.push_str(&r.render_text());
        }
        out.push_str(&format!(
            "\ntotal: {}/{} jobs passed\n",
            self.reports.iter().filter(|r| r.ok).count(),
            self.reports.len()
        ));
        out
    }
}
