//! Linear QSPR models of thermochemical properties of straight-chain
//! monocarboxylic acids against degree-based indices.
//!
//! Molecules are hydrogen-suppressed skeletons: `CH₃(CH₂)_{m−2}COOH` becomes a
//! path of `m` carbons with both oxygens hanging off the carboxyl carbon.
//!
//! RMSE is reported with the residual degrees of freedom `n − 2` as
//! denominator (the residual standard error of a two-parameter fit); the
//! population form `√(SS_res / n)` is kept alongside it.

use std::path::Path;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::invariants::{index_total, sombor, EdgeFunction};

/// Tolerance between a dataset's SO column and the recomputed value.
pub const SO_COLUMN_TOLERANCE: f64 = 1e-4;

const BUNDLED: &str = include_str!("../data/monocarboxylic_acids.csv");

#[derive(Debug, Error)]
pub enum QsprError {
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("row {row}: {reason}")]
    Data { row: usize, reason: String },
    #[error("dataset is empty")]
    Empty,
    #[error("regression needs at least 3 paired points, got x={x}, y={y}")]
    TooFewPoints { x: usize, y: usize },
    #[error("descriptor has zero variance")]
    DegenerateDescriptor,
    #[error("acid needs at least 2 carbons, got {0}")]
    CarbonCount(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Property {
    Combustion,
    Formation,
    Sublimation,
    Vaporization,
}

impl Property {
    pub const ALL: [Property; 4] = [
        Property::Combustion,
        Property::Formation,
        Property::Sublimation,
        Property::Vaporization,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Property::Combustion => "enthalpy of combustion",
            Property::Formation => "enthalpy of formation (liquid)",
            Property::Sublimation => "enthalpy of sublimation",
            Property::Vaporization => "enthalpy of vaporization",
        }
    }
}

/// Hydrogen-suppressed graph of the straight-chain acid with `m` carbons.
///
/// Carbons are `0..m` along the chain, vertex `m−1` is the carboxyl carbon,
/// and the two oxygens are `m` and `m+1`.
pub fn acid_graph(m: usize) -> Result<Graph, QsprError> {
    if m < 2 {
        return Err(QsprError::CarbonCount(m));
    }
    let mut g = Graph::path(m).disjoint_union(&Graph::empty(2));
    g.add_edge(m - 1, m).expect("fresh vertex");
    g.add_edge(m - 1, m + 1).expect("fresh vertex");
    Ok(g)
}

const STEMS: [&str; 19] = [
    "acetic",
    "propanoic",
    "butanoic",
    "pentanoic",
    "hexanoic",
    "heptanoic",
    "octanoic",
    "nonanoic",
    "decanoic",
    "undecanoic",
    "dodecanoic",
    "tridecanoic",
    "tetradecanoic",
    "pentadecanoic",
    "hexadecanoic",
    "heptadecanoic",
    "octadecanoic",
    "nonadecanoic",
    "eicosanoic",
];

/// Carbon count from a systematic acid name such as "Hexadecanoic acid".
pub fn carbons_from_name(name: &str) -> Option<usize> {
    let lower = name.trim().to_ascii_lowercase();
    let stem = lower.strip_suffix(" acid").unwrap_or(&lower).trim();
    let stem = if stem == "icosanoic" {
        "eicosanoic"
    } else {
        stem
    };
    STEMS.iter().position(|&s| s == stem).map(|i| i + 2)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Compound {
    pub name: String,
    pub carbons: usize,
    /// kJ/mol
    pub combustion: f64,
    pub formation: f64,
    pub sublimation: f64,
    pub vaporization: f64,
    /// recomputed from [`acid_graph`]
    pub so: f64,
}

impl Compound {
    pub fn property(&self, p: Property) -> f64 {
        match p {
            Property::Combustion => self.combustion,
            Property::Formation => self.formation,
            Property::Sublimation => self.sublimation,
            Property::Vaporization => self.vaporization,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Dataset {
    pub rows: Vec<Compound>,
}

#[derive(Debug, serde::Deserialize)]
struct RawRow {
    compound: String,
    dhc: f64,
    dhf: f64,
    dhsub: f64,
    dhvap: f64,
    so: Option<f64>,
}

impl Dataset {
    /// Parses `compound,dhc,dhf,dhsub,dhvap[,so]`. SO is always recomputed; a
    /// supplied SO column must agree within [`SO_COLUMN_TOLERANCE`].
    pub fn from_csv(text: &str) -> Result<Dataset, QsprError> {
        let mut reader = csv::ReaderBuilder::new()
            .trim(csv::Trim::All)
            .from_reader(text.as_bytes());
        let mut rows = Vec::new();
        for (idx, record) in reader.deserialize::<RawRow>().enumerate() {
            // header is line 1
            let row = idx + 2;
            let raw = record?;
            let carbons = carbons_from_name(&raw.compound).ok_or_else(|| QsprError::Data {
                row,
                reason: format!("cannot infer carbon count from {:?}", raw.compound),
            })?;
            for (label, v) in [
                ("dhc", raw.dhc),
                ("dhf", raw.dhf),
                ("dhsub", raw.dhsub),
                ("dhvap", raw.dhvap),
            ] {
                if !(v > 0.0 && v.is_finite()) {
                    return Err(QsprError::Data {
                        row,
                        reason: format!("{label} must be positive, got {v}"),
                    });
                }
            }
            let so = sombor(&acid_graph(carbons)?);
            if let Some(given) = raw.so {
                if (given - so).abs() > SO_COLUMN_TOLERANCE {
                    return Err(QsprError::Data {
                        row,
                        reason: format!("SO column {given} disagrees with recomputed {so:.6}"),
                    });
                }
            }
            rows.push(Compound {
                name: raw.compound,
                carbons,
                combustion: raw.dhc,
                formation: raw.dhf,
                sublimation: raw.dhsub,
                vaporization: raw.dhvap,
                so,
            });
        }
        if rows.is_empty() {
            return Err(QsprError::Empty);
        }
        Ok(Dataset { rows })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Dataset, QsprError> {
        Dataset::from_csv(&std::fs::read_to_string(path)?)
    }

    /// The 19 acids from acetic (C2) to eicosanoic (C20).
    pub fn bundled() -> Dataset {
        Dataset::from_csv(BUNDLED).expect("bundled dataset is valid")
    }

    pub fn bundled_csv() -> &'static str {
        BUNDLED
    }

    pub fn so_column(&self) -> Vec<f64> {
        self.rows.iter().map(|r| r.so).collect()
    }

    pub fn column(&self, p: Property) -> Vec<f64> {
        self.rows.iter().map(|r| r.property(p)).collect()
    }
}

/// Simple linear model `y ≈ slope · x + intercept`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegressionModel {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
    /// `1 − (1 − R²)(n − 1)/(n − 2)`
    pub adjusted_r_squared: f64,
    /// `√(SS_res / (n − 2))`
    pub rmse: f64,
    /// `√(SS_res / n)`
    pub rmse_population: f64,
    pub residuals: Vec<f64>,
}

impl RegressionModel {
    pub fn predict(&self, x: f64) -> f64 {
        self.slope * x + self.intercept
    }
}

/// Ordinary least squares through the normal equations, with centred sums.
pub fn ols_fit(x: &[f64], y: &[f64]) -> Result<RegressionModel, QsprError> {
    if x.len() != y.len() || x.len() < 3 {
        return Err(QsprError::TooFewPoints {
            x: x.len(),
            y: y.len(),
        });
    }
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxx: f64 = x.iter().map(|&a| (a - mx) * (a - mx)).sum();
    let sxy: f64 = x.iter().zip(y).map(|(&a, &b)| (a - mx) * (b - my)).sum();
    if sxx <= f64::EPSILON * mx.abs().max(1.0) * n {
        return Err(QsprError::DegenerateDescriptor);
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let residuals: Vec<f64> = x
        .iter()
        .zip(y)
        .map(|(&a, &b)| b - (slope * a + intercept))
        .collect();
    let ss_res: f64 = residuals.iter().map(|r| r * r).sum();
    let ss_tot: f64 = y.iter().map(|&b| (b - my) * (b - my)).sum();
    let r_squared = if ss_tot > 0.0 {
        (1.0 - ss_res / ss_tot).clamp(0.0, 1.0)
    } else {
        1.0
    };
    Ok(RegressionModel {
        slope,
        intercept,
        r_squared,
        adjusted_r_squared: 1.0 - (1.0 - r_squared) * (n - 1.0) / (n - 2.0),
        rmse: (ss_res / (n - 2.0)).sqrt(),
        rmse_population: (ss_res / n).sqrt(),
        residuals,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropertyFit {
    pub property: Property,
    pub model: RegressionModel,
}

/// Fit quality of one comparison index against one property.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IndexComparison {
    pub index: String,
    pub property: Property,
    pub r_squared: f64,
    pub rmse: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QsprStudy {
    pub fits: Vec<PropertyFit>,
    pub comparison: Vec<IndexComparison>,
}

impl QsprStudy {
    pub fn fit(&self, p: Property) -> &RegressionModel {
        &self
            .fits
            .iter()
            .find(|f| f.property == p)
            .expect("all properties fitted")
            .model
    }
}

/// One SO model per property, plus the same fits for every index in
/// [`EdgeFunction::comparison_set`].
pub fn fit_all(ds: &Dataset) -> Result<QsprStudy, QsprError> {
    let so = ds.so_column();
    let fits = Property::ALL
        .iter()
        .map(|&p| {
            Ok(PropertyFit {
                property: p,
                model: ols_fit(&so, &ds.column(p))?,
            })
        })
        .collect::<Result<Vec<_>, QsprError>>()?;

    let graphs = ds
        .rows
        .iter()
        .map(|r| acid_graph(r.carbons))
        .collect::<Result<Vec<_>, _>>()?;
    let mut comparison = Vec::new();
    for w in EdgeFunction::comparison_set() {
        let x: Vec<f64> = graphs.iter().map(|g| index_total(g, w)).collect();
        for p in Property::ALL {
            let m = ols_fit(&x, &ds.column(p))?;
            comparison.push(IndexComparison {
                index: w.name.to_string(),
                property: p,
                r_squared: m.r_squared,
                rmse: m.rmse,
            });
        }
    }
    Ok(QsprStudy { fits, comparison })
}

/// Reference values the bundled study is checked against.
pub mod published {
    use super::Property;

    /// SO of acids C2..C20, five significant decimals.
    pub const SO_COLUMN: [f64; 19] = [
        9.48683, 12.1662, 14.9946, 17.8230, 20.6515, 23.4799, 26.3083, 29.1367, 31.9652, 34.7936,
        37.6220, 40.4504, 43.2789, 46.1073, 48.9357, 51.7642, 54.5926, 57.4210, 60.2494,
    ];

    pub struct Reference {
        pub property: Property,
        pub slope: f64,
        pub intercept: f64,
        pub r_squared: f64,
        pub rmse: f64,
    }

    pub const MODELS: [Reference; 4] = [
        Reference {
            property: Property::Combustion,
            slope: 229.7,
            intercept: -1263.0,
            r_squared: 0.99998,
            rmse: 17.987,
        },
        Reference {
            property: Property::Formation,
            slope: 10.65,
            intercept: 369.2,
            r_squared: 0.99737,
            rmse: 8.9567,
        },
        Reference {
            property: Property::Sublimation,
            slope: 1.212,
            intercept: 36.41,
            r_squared: 0.99745,
            rmse: 1.0034,
        },
        Reference {
            property: Property::Vaporization,
            slope: 2.559,
            intercept: 21.83,
            r_squared: 0.99355,
            rmse: 3.2771,
        },
    ];

    pub const SO_TOLERANCE: f64 = 5e-5;
    pub const COEFFICIENT_RELATIVE_TOLERANCE: f64 = 5e-3;
    pub const R_SQUARED_TOLERANCE: f64 = 1e-4;
    pub const RMSE_RELATIVE_TOLERANCE: f64 = 1e-2;
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckLine {
    pub item: String,
    pub computed: f64,
    pub reference: f64,
    pub tolerance: String,
    pub passed: bool,
}

fn relative_ok(computed: f64, reference: f64, tol: f64) -> bool {
    (computed - reference).abs() <= tol * reference.abs()
}

/// Compares the bundled study against the reference SO column and models.
/// Acceptance bands used by [`check_against_published_with`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    pub so_absolute: f64,
    pub coefficient_relative: f64,
    pub r_squared_absolute: f64,
    pub rmse_relative: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        use published::*;
        Tolerances {
            so_absolute: SO_TOLERANCE,
            coefficient_relative: COEFFICIENT_RELATIVE_TOLERANCE,
            r_squared_absolute: R_SQUARED_TOLERANCE,
            rmse_relative: RMSE_RELATIVE_TOLERANCE,
        }
    }
}

pub fn check_against_published(ds: &Dataset, study: &QsprStudy) -> Vec<CheckLine> {
    check_against_published_with(ds, study, &Tolerances::default())
}

pub fn check_against_published_with(
    ds: &Dataset,
    study: &QsprStudy,
    tol: &Tolerances,
) -> Vec<CheckLine> {
    use published::{MODELS, SO_COLUMN};
    let mut out = Vec::new();
    for (row, &reference) in ds.rows.iter().zip(SO_COLUMN.iter()) {
        out.push(CheckLine {
            item: format!("SO {}", row.name),
            computed: row.so,
            reference,
            tolerance: format!("abs {:e}", tol.so_absolute),
            passed: (row.so - reference).abs() <= tol.so_absolute,
        });
    }
    for r in &MODELS {
        let m = study.fit(r.property);
        let name = r.property.label();
        let rel = format!("rel {:e}", tol.coefficient_relative);
        out.push(CheckLine {
            item: format!("{name}: slope"),
            computed: m.slope,
            reference: r.slope,
            tolerance: rel.clone(),
            passed: relative_ok(m.slope, r.slope, tol.coefficient_relative),
        });
        out.push(CheckLine {
            item: format!("{name}: intercept"),
            computed: m.intercept,
            reference: r.intercept,
            tolerance: rel,
            passed: relative_ok(m.intercept, r.intercept, tol.coefficient_relative),
        });
        out.push(CheckLine {
            item: format!("{name}: R^2"),
            computed: m.r_squared,
            reference: r.r_squared,
            tolerance: format!("abs {:e}", tol.r_squared_absolute),
            passed: (m.r_squared - r.r_squared).abs() <= tol.r_squared_absolute,
        });
        out.push(CheckLine {
            item: format!("{name}: RMSE"),
            computed: m.rmse,
            reference: r.rmse,
            tolerance: format!("rel {:e}", tol.rmse_relative),
            passed: relative_ok(m.rmse, r.rmse, tol.rmse_relative),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn acid_skeletons() {
        let acetic = acid_graph(2).unwrap();
        assert_eq!(acetic.n(), 4);
        assert!((sombor(&acetic) - 9.48683).abs() < 5e-6);
        assert!((sombor(&acid_graph(3).unwrap()) - 12.1662).abs() < 5e-5);
        assert!((sombor(&acid_graph(20).unwrap()) - 60.2494).abs() < 5e-5);
        for m in 3..30 {
            let g = acid_graph(m).unwrap();
            assert_eq!(g.n(), m + 2);
            let closed = 5f64.sqrt()
                + (m as f64 - 3.0) * 2.0 * 2f64.sqrt()
                + 13f64.sqrt()
                + 2.0 * 10f64.sqrt();
            assert!((sombor(&g) - closed).abs() < 1e-9);
            let step = sombor(&acid_graph(m + 1).unwrap()) - sombor(&g);
            assert!((step - 2.0 * 2f64.sqrt()).abs() < 1e-9);
        }
        assert!(matches!(acid_graph(1), Err(QsprError::CarbonCount(1))));
    }

    #[test]
    fn names_to_carbons() {
        assert_eq!(carbons_from_name("Acetic acid"), Some(2));
        assert_eq!(carbons_from_name("eicosanoic acid"), Some(20));
        assert_eq!(carbons_from_name("Icosanoic acid"), Some(20));
        assert_eq!(carbons_from_name("Benzoic acid"), None);
    }

    #[test]
    fn bundled_rows() {
        let ds = Dataset::bundled();
        assert_eq!(ds.rows.len(), 19);
        let first = &ds.rows[0];
        assert_eq!(
            (
                first.name.as_str(),
                first.combustion,
                first.formation,
                first.sublimation,
                first.vaporization
            ),
            ("Acetic acid", 875.16, 483.5, 46.3, 49.7)
        );
        let last = ds.rows.last().unwrap();
        assert_eq!(
            (
                last.name.as_str(),
                last.combustion,
                last.formation,
                last.sublimation,
                last.vaporization
            ),
            ("Eicosanoic acid", 12574.2, 1012.6, 109.9, 179.2)
        );
        assert!((last.so - 60.2494).abs() < 5e-5);
        assert!(ds.so_column().windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn dataset_errors() {
        assert!(matches!(Dataset::from_csv(""), Err(QsprError::Empty)));
        assert!(matches!(
            Dataset::from_csv("compound,dhc,dhf,dhsub,dhvap\n"),
            Err(QsprError::Empty)
        ));
        let bad_so = "compound,dhc,dhf,dhsub,dhvap,so\nAcetic acid,875.16,483.5,46.3,49.7,9.5\n";
        assert!(matches!(
            Dataset::from_csv(bad_so),
            Err(QsprError::Data { row: 2, .. })
        ));
        let negative = "compound,dhc,dhf,dhsub,dhvap\nAcetic acid,875.16,-1,46.3,49.7\n";
        assert!(matches!(
            Dataset::from_csv(negative),
            Err(QsprError::Data { row: 2, .. })
        ));
        let unknown = "compound,dhc,dhf,dhsub,dhvap\nAcetic acid,1,1,1,1\nMystery,1,1,1,1\n";
        assert!(matches!(
            Dataset::from_csv(unknown),
            Err(QsprError::Data { row: 3, .. })
        ));
        assert!(matches!(
            Dataset::from_csv("compound,dhc\nAcetic acid,oops\n"),
            Err(QsprError::Csv(_))
        ));
        let no_so = "compound,dhc,dhf,dhsub,dhvap\nPropanoic acid,1527.3,510.8,50.0,56.1\n";
        assert!((Dataset::from_csv(no_so).unwrap().rows[0].so - 12.1662).abs() < 5e-5);
    }

    #[test]
    fn exact_line() {
        let x = [1.0, 2.0, 3.0, 4.0];
        let y: Vec<f64> = x.iter().map(|v| 2.0 * v + 1.0).collect();
        let m = ols_fit(&x, &y).unwrap();
        assert!((m.slope - 2.0).abs() < 1e-12);
        assert!((m.intercept - 1.0).abs() < 1e-12);
        assert_eq!(m.r_squared, 1.0);
        assert!(m.rmse < 1e-12);
        assert!((m.predict(10.0) - 21.0).abs() < 1e-12);
    }

    #[test]
    fn fit_guards() {
        assert!(matches!(
            ols_fit(&[1.0, 2.0], &[1.0, 2.0]),
            Err(QsprError::TooFewPoints { .. })
        ));
        assert!(matches!(
            ols_fit(&[1.0, 2.0, 3.0], &[1.0, 2.0]),
            Err(QsprError::TooFewPoints { .. })
        ));
        assert!(matches!(
            ols_fit(&[2.0; 5], &[1.0, 2.0, 3.0, 4.0, 5.0]),
            Err(QsprError::DegenerateDescriptor)
        ));
    }

    #[test]
    fn bundled_study_shapes() {
        let ds = Dataset::bundled();
        let study = fit_all(&ds).unwrap();
        assert_eq!(study.fits.len(), 4);
        assert_eq!(study.comparison.len(), 24);
        let c = study.fit(Property::Combustion);
        assert!((c.slope - 229.7).abs() / 229.7 < 5e-3);
        assert!((c.intercept + 1263.0).abs() / 1263.0 < 5e-3);
        let f = study.fit(Property::Formation);
        assert!((f.slope - 10.65).abs() / 10.65 < 5e-3);
        assert!((f.intercept - 369.2).abs() / 369.2 < 5e-3);
        assert!((f.r_squared - 0.99737).abs() < 1e-4);
        assert!((f.rmse - 8.9567).abs() / 8.9567 < 1e-2);
        let s = study.fit(Property::Sublimation);
        assert!((s.r_squared - 0.99745).abs() < 1e-4);
        assert!((s.rmse - 1.0034).abs() / 1.0034 < 1e-2);
    }
}
