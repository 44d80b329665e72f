use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub const REALITY_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PtClass {
    AllReal,
    ConjugatePairs,
    Mixed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "label", content = "partner")]
pub enum PtLabel {
    Real,
    /// Index of the conjugate partner.
    Paired(usize),
    Unpaired,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PtReport {
    pub class: PtClass,
    pub labels: Vec<PtLabel>,
    /// True when some complex energy has no conjugate partner.
    pub anomaly: bool,
}

fn tolerance(e: Complex64) -> f64 {
    REALITY_TOLERANCE * e.norm().max(1.0)
}

/// Labels each energy real or paired with its complex conjugate.
///
/// The class is `AllReal` when every energy is real, `ConjugatePairs` when none
/// is, and `Mixed` otherwise. Unpaired complex energies set `anomaly`; an empty
/// spectrum reports `AllReal` with no labels.
pub fn classify_pt(energies: &[Complex64]) -> PtReport {
    let mut labels = vec![PtLabel::Unpaired; energies.len()];
    for (i, e) in energies.iter().enumerate() {
        if e.im.abs() < tolerance(*e) {
            labels[i] = PtLabel::Real;
        }
    }
    for i in 0..energies.len() {
        if labels[i] != PtLabel::Unpaired {
            continue;
        }
        let target = energies[i].conj();
        let partner = (0..energies.len())
            .filter(|&j| j != i && labels[j] == PtLabel::Unpaired)
            .filter(|&j| (energies[j] - target).norm() < tolerance(target))
            .min_by(|&a, &b| (energies[a] - target).norm().total_cmp(&(energies[b] - target).norm()));
        if let Some(j) = partner {
            labels[i] = PtLabel::Paired(j);
            labels[j] = PtLabel::Paired(i);
        }
    }
    let real = labels.iter().filter(|l| **l == PtLabel::Real).count();
    let anomaly = labels.contains(&PtLabel::Unpaired);
    let class = if real == labels.len() {
        PtClass::AllReal
    } else if real == 0 {
        PtClass::ConjugatePairs
    } else {
        PtClass::Mixed
    };
    PtReport { class, labels, anomaly }
}
