//! TSV and human-readable renderings. Every TSV table has a header line and
//! one row per element of the report's main array.

use std::fmt::Write;

use crate::report::{ConjecturesReport, IdealsReport, MicsReport, ShowReport};

fn flag(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt(b: Option<bool>) -> &'static str {
    b.map_or("n/a", flag)
}

pub trait Render {
    fn tsv(&self) -> String;
    fn pretty(&self) -> String;
}

impl Render for ShowReport {
    fn tsv(&self) -> String {
        let mut out = String::from("index\tcoeffs\theight\tlength\tin_h\n");
        for r in &self.roots {
            let len = serde_json::to_value(r.length).unwrap();
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}",
                r.index,
                r.coeffs,
                r.height,
                len.as_str().unwrap(),
                r.in_h
            );
        }
        out
    }

    fn pretty(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{} ({} labeling): {} positive roots, h = {}",
            self.system,
            self.labeling,
            self.roots.len(),
            self.coxeter_number
        );
        let _ = writeln!(out, "highest root {}", self.highest_root);
        let width = self.roots.iter().map(|r| r.coeffs.len()).max().unwrap_or(0);
        let _ = writeln!(out, "\n{:>4}  {:<width$}  {:>3}  {:<6} H", "#", "root", "ht", "length");
        for r in &self.roots {
            let len = serde_json::to_value(r.length).unwrap();
            let line = format!(
                "{:>4}  {:<width$}  {:>3}  {:<6} {}",
                r.index,
                r.coeffs,
                r.height,
                len.as_str().unwrap(),
                if r.in_h { "*" } else { "" }
            );
            let _ = writeln!(out, "{}", line.trim_end());
        }
        let _ = writeln!(out, "\nLevi components");
        for l in &self.levi {
            let comps: Vec<String> = l
                .components
                .iter()
                .map(|c| format!("{} (h={})", c.type_label, c.coxeter_number))
                .collect();
            let _ = writeln!(
                out,
                "  α{:<2} [θ:α]={}  {}",
                l.alpha,
                l.theta_height,
                if comps.is_empty() { "-".to_string() } else { comps.join(" + ") }
            );
        }
        out
    }
}

impl Render for IdealsReport {
    fn tsv(&self) -> String {
        let mut out = String::from("index\tsize\tgenerators\tfiber\tis_min\tis_max\n");
        for r in &self.ideals {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}",
                r.index,
                r.size,
                r.generators.join(" "),
                r.fiber.as_deref().unwrap_or("-"),
                r.is_min,
                r.is_max
            );
        }
        out
    }

    fn pretty(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{} ({} labeling): {} abelian ideals, {} fibres",
            self.system,
            self.labeling,
            self.count,
            self.fibers.len()
        );
        let _ = writeln!(out, "\nmaximal abelian ideals");
        for m in &self.maximal {
            let _ = writeln!(out, "  I(α{})_max  size {}", m.alpha, m.size);
        }
        let _ = writeln!(out, "\n{:>5}  {:>4}  {:<8}  fibre / generators", "#", "size", "min/max");
        for r in &self.ideals {
            let tag = match (r.is_min, r.is_max) {
                (true, true) => "min,max",
                (true, false) => "min",
                (false, true) => "max",
                _ => "",
            };
            let _ = writeln!(
                out,
                "{:>5}  {:>4}  {:<8}  {} / {}",
                r.index,
                r.size,
                tag,
                r.fiber.as_deref().unwrap_or("-"),
                r.generators.join(" ")
            );
        }
        out
    }
}

impl Render for MicsReport {
    fn tsv(&self) -> String {
        let mut out = String::from("gamma\tword\tlength\n");
        for m in &self.members {
            let _ = writeln!(out, "{}\t{}\t{}", m.gamma, m.word, m.length);
        }
        out
    }

    fn pretty(&self) -> String {
        let mut out = String::new();
        let alpha = match &self.alpha {
            serde_json::Value::String(s) => format!("{{{s}}}"),
            v => format!("α{v}"),
        };
        let _ = writeln!(
            out,
            "F_{alpha} in {} ({} labeling), {}, {} members",
            self.system, self.labeling, self.construction, self.size
        );
        let width = self.members.iter().map(|m| m.gamma.len()).max().unwrap_or(0);
        for m in &self.members {
            let _ = writeln!(out, "  {:<width$}  {}", m.gamma, m.word);
        }
        let _ = writeln!(out, "\nessential ({}): {}", self.essential.len(), self.essential.join(" "));
        let _ = writeln!(out, "defect: {}", self.defect);
        let c = &self.checks;
        let _ = writeln!(
            out,
            "checks: complete {}, minimal {}, thm41 {}, thm45 {}, conj51 {}, conj52 {}, bstable {}",
            flag(c.complete),
            flag(c.minimal),
            opt(c.thm41),
            opt(c.thm45),
            opt(c.conj51),
            opt(c.conj52),
            flag(c.bstable)
        );
        let _ = writeln!(out, "\nmultiplicities");
        let width = self.multiplicities.keys().map(|k| k.len()).max().unwrap_or(0);
        for (root, n) in &self.multiplicities {
            let _ = writeln!(out, "  {root:<width$}  {n}");
        }
        out
    }
}

impl Render for ConjecturesReport {
    fn tsv(&self) -> String {
        let mut out = String::from(
            "system\talpha\tis_hat\tis_endpoint\tsize\tess_size\tdefect\tbound\tconj51\tconj52\tbstable\n",
        );
        for s in &self.systems {
            for r in &s.rows {
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    s.system,
                    r.alpha,
                    r.is_hat,
                    r.is_endpoint,
                    r.size,
                    r.ess_size,
                    r.defect,
                    r.bound,
                    r.conj51,
                    r.conj52,
                    r.bstable
                );
            }
        }
        out
    }

    fn pretty(&self) -> String {
        let mut out = String::new();
        for s in &self.systems {
            let _ = write!(out, "{} (h = {}): {}", s.system, s.coxeter_number, s.scope);
            if let Some(a) = s.alpha_hat {
                let _ = write!(out, ", α̂ = α{a}");
            }
            out.push('\n');
            for r in &s.rows {
                let mut notes = Vec::new();
                if r.is_hat {
                    notes.push("α̂".to_string());
                }
                if r.is_endpoint {
                    notes.push("endpoint".to_string());
                }
                if !r.conj51_witnesses.is_empty() {
                    notes.push(format!("outside H: {}", r.conj51_witnesses.join(" ")));
                }
                let line = format!(
                    "  α{:<2} |F|={:<3} |ess|={:<3} defect={:<3} (≤ {})  conj51 {}  conj52 {}  bstable {}  {}",
                    r.alpha,
                    r.size,
                    r.ess_size,
                    r.defect,
                    r.bound,
                    flag(r.conj51),
                    flag(r.conj52),
                    flag(r.bstable),
                    notes.join(", ")
                );
                let _ = writeln!(out, "{}", line.trim_end());
            }
        }
        let _ = writeln!(
            out,
            "\n{}",
            if self.all_hold {
                "all conjecture instances hold"
            } else {
                "conjecture violations found"
            }
        );
        out
    }
}
