//! Pass/fail reporting for the identity suites.
//!
//! Every check records a name and, on failure, the first offending
//! q-degree (or a textual residual). Reports render identically across
//! runs for a fixed configuration.

use crate::logseries::LogSeries;
use crate::qseries::RSeries;
use crate::rat::rat_str;

#[derive(Clone, Debug)]
pub struct Checked {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Checked {
    pub fn pass(name: &str) -> Self {
        Self {
            name: name.into(),
            passed: true,
            detail: String::new(),
        }
    }
    pub fn fail(name: &str, detail: String) -> Self {
        Self {
            name: name.into(),
            passed: false,
            detail,
        }
    }
    pub fn from_bool(name: &str, ok: bool, detail: &str) -> Self {
        if ok {
            Self::pass(name)
        } else {
            Self::fail(name, detail.into())
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub title: String,
    pub items: Vec<Checked>,
}

impl CheckReport {
    pub fn new(title: &str) -> Self {
        Self {
            title: title.into(),
            items: Vec::new(),
        }
    }

    pub fn push(&mut self, c: Checked) {
        self.items.push(c);
    }

    pub fn push_series_eq(&mut self, name: &str, lhs: &RSeries, rhs: &RSeries) {
        let n = lhs.order().min(rhs.order());
        for d in 0..=n {
            if lhs.coeff(d) != rhs.coeff(d) {
                self.push(Checked::fail(
                    name,
                    format!(
                        "first mismatch at q^{d}: {} vs {}",
                        rat_str(lhs.coeff(d)),
                        rat_str(rhs.coeff(d))
                    ),
                ));
                return;
            }
        }
        self.push(Checked::pass(name));
    }

    pub fn push_series_zero(&mut self, name: &str, s: &RSeries) {
        for d in 0..=s.order() {
            if !num_traits::Zero::is_zero(s.coeff(d)) {
                self.push(Checked::fail(
                    name,
                    format!("nonzero at q^{d}: {}", rat_str(s.coeff(d))),
                ));
                return;
            }
        }
        self.push(Checked::pass(name));
    }

    pub fn push_log_zero(&mut self, name: &str, s: &LogSeries) {
        for j in 0..=s.tdeg() {
            let p = s.part(j);
            for d in 0..=p.order() {
                if !num_traits::Zero::is_zero(p.coeff(d)) {
                    self.push(Checked::fail(
                        name,
                        format!("nonzero at t^{j} q^{d}: {}", rat_str(p.coeff(d))),
                    ));
                    return;
                }
            }
        }
        self.push(Checked::pass(name));
    }

    pub fn push_log_eq(&mut self, name: &str, lhs: &LogSeries, rhs: &LogSeries) {
        self.push_log_zero(name, &lhs.sub(rhs));
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.items.extend(other.items);
    }

    pub fn all_passed(&self) -> bool {
        self.items.iter().all(|c| c.passed)
    }

    pub fn render_plain(&self) -> String {
        let mut out = String::new();
        for c in &self.items {
            if c.passed {
                out.push_str(&format!("PASS {}\n", c.name));
            } else {
                out.push_str(&format!("FAIL {} ({})\n", c.name, c.detail));
            }
        }
        out
    }
}
