use balseg::ratfunc::{asymptotic_profile, generating_function};
use balseg::verify::{self, SuiteStatus, VerifyConfig};
use balseg::words::{enumerate_balanced, enumerate_balanced_palindromes};
use balseg::{counting, Count, Counter, Family, RenderMode, Word};
use serde_json::{json, Value};

use crate::report::{CliError, Report};

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(T::to_string).collect()
}

fn joined<T: ToString>(items: &[T]) -> String {
    strings(items).join(", ")
}

pub fn count(family: Family, len: i64, height: i64) -> Result<Report, CliError> {
    let value = Counter::new().count(family, len, height);
    Ok(Report {
        command: "count",
        parameters: vec![
            ("family", family.to_string()),
            ("L", len.to_string()),
            ("h", height.to_string()),
        ],
        result: json!({ "count": value.to_string() }),
        pretty: format!("{value}\n"),
        csv: vec![
            strings(&["family", "L", "h", "count"]),
            vec![
                family.to_string(),
                len.to_string(),
                height.to_string(),
                value.to_string(),
            ],
        ],
    })
}

pub fn table(family: Family, max_len: usize) -> Result<Report, CliError> {
    let table = Counter::new().table(family, max_len);
    let totals: Vec<Count> = (0..=max_len)
        .map(|l| counting::total(family, l as u64))
        .collect();
    for (len, closed) in totals.iter().enumerate() {
        if table.row_total(len) != *closed {
            return Err(CliError::Inconsistency(format!(
                "row {len} of the {family} table does not sum to the closed form"
            )));
        }
    }

    let rows: Vec<Vec<String>> = table.rows().iter().map(|r| strings(r)).collect();

    let mut csv = vec![std::iter::once("L".to_string())
        .chain((0..=max_len).map(|h| h.to_string()))
        .chain(std::iter::once("total".to_string()))
        .collect::<Vec<_>>()];
    for (len, row) in rows.iter().enumerate() {
        let mut line = vec![len.to_string()];
        line.extend(row.iter().cloned());
        line.extend(std::iter::repeat_n(String::new(), max_len - len));
        line.push(totals[len].to_string());
        csv.push(line);
    }

    Ok(Report {
        command: "table",
        parameters: vec![
            ("family", family.to_string()),
            ("max_L", max_len.to_string()),
        ],
        result: json!({ "rows": rows, "totals": strings(&totals) }),
        pretty: pretty_table(family, &rows, &totals),
        csv,
    })
}

/// Triangular layout with a totals column.
fn pretty_table(family: Family, rows: &[Vec<String>], totals: &[Count]) -> String {
    let max_len = rows.len() - 1;
    let cell = rows
        .iter()
        .flatten()
        .map(String::len)
        .chain(std::iter::once(max_len.to_string().len()))
        .max()
        .unwrap_or(1)
        + 1;
    let label = max_len.to_string().len().max(3);
    let total_label = format!("{family}(L)");
    let total_width = totals
        .iter()
        .map(|t| t.to_string().len())
        .max()
        .unwrap_or(1)
        .max(total_label.len());

    let mut out = format!("{:>label$} ||", "L\\h");
    for h in 0..=max_len {
        out.push_str(&format!("{h:>cell$}"));
    }
    out.push_str(&format!(" || {total_label:>total_width$}\n"));
    out.push_str(&"-".repeat(label + 3 + cell * (max_len + 1) + 4 + total_width));
    out.push('\n');
    for (len, row) in rows.iter().enumerate() {
        out.push_str(&format!("{len:>label$} ||"));
        for value in row {
            out.push_str(&format!("{value:>cell$}"));
        }
        out.push_str(&" ".repeat(cell * (max_len - len)));
        out.push_str(&format!(" || {:>total_width$}\n", totals[len].to_string()));
    }
    out
}

pub struct EnumerateArgs {
    pub len: i64,
    pub height: i64,
    pub palindromes: bool,
    pub render: Option<RenderMode>,
    pub cap: usize,
}

pub fn enumerate(args: &EnumerateArgs) -> Result<Report, CliError> {
    let EnumerateArgs {
        len,
        height,
        palindromes,
        render,
        cap,
    } = *args;
    if len < 0 || height < 0 || height > len {
        return Err(CliError::Usage(format!(
            "enumeration needs 0 <= h <= L, got L={len} h={height}"
        )));
    }
    if len as u64 > cap as u64 {
        return Err(CliError::ResourceCap(format!(
            "L={len} exceeds the enumeration cap {cap} (raise it with --cap or BALSEG_CAP)"
        )));
    }
    let (len, height) = (len as usize, height as usize);
    let words = if palindromes {
        enumerate_balanced_palindromes(len, height, None)?
    } else {
        enumerate_balanced(len, height, &Word::empty(), &Word::empty())?
    };

    let drawings: Option<Vec<String>> =
        render.map(|mode| words.iter().map(|w| w.render_path(mode)).collect());

    let mut pretty = String::new();
    for (i, word) in words.iter().enumerate() {
        pretty.push_str(&format!("{word}\n"));
        if let Some(drawings) = &drawings {
            pretty.push_str(&drawings[i]);
            pretty.push('\n');
        }
    }

    let mut csv = vec![strings(&["index", "word", "height"])];
    csv.extend(
        words
            .iter()
            .enumerate()
            .map(|(i, w)| vec![i.to_string(), w.to_string(), w.height().to_string()]),
    );

    let mut result = json!({
        "count": words.len().to_string(),
        "words": strings(&words),
    });
    if let Some(drawings) = drawings {
        result["renderings"] = json!(drawings);
    }

    let mut parameters = vec![
        ("L", len.to_string()),
        ("h", height.to_string()),
        ("palindromes", palindromes.to_string()),
    ];
    if let Some(mode) = render {
        let name = match mode {
            RenderMode::Naive => "naive",
            RenderMode::Standard => "standard",
        };
        parameters.push(("render", name.to_string()));
    }

    Ok(Report {
        command: "enumerate",
        parameters,
        result,
        pretty,
        csv,
    })
}

pub fn genfunc(family: Family, height: i64, terms: usize) -> Result<Report, CliError> {
    if height < 0 {
        return Err(CliError::Usage(format!(
            "height must be >= 0, got {height}"
        )));
    }
    let gf = generating_function(&mut Counter::new(), family, height as usize)?;
    let coefficients = gf.series(terms);
    let factors = gf.factor_strings();
    let numerator = gf.numerator().to_string();

    let pretty = format!(
        "numerator: {numerator}\ndenominator: [{}]\ncoefficients: {}\n",
        factors
            .iter()
            .map(|f| format!("\"{f}\""))
            .collect::<Vec<_>>()
            .join(", "),
        joined(&coefficients)
    );

    let mut csv = vec![strings(&["section", "index", "value"])];
    let numerator_coeffs: Vec<String> = if gf.numerator().is_zero() {
        vec!["0".into()]
    } else {
        strings(gf.numerator().coeffs())
    };
    for (i, c) in numerator_coeffs.into_iter().enumerate() {
        csv.push(vec!["numerator".into(), i.to_string(), c]);
    }
    for (i, f) in factors.iter().enumerate() {
        csv.push(vec!["denominator_factor".into(), i.to_string(), f.clone()]);
    }
    for (i, c) in coefficients.iter().enumerate() {
        csv.push(vec!["coefficient".into(), i.to_string(), c.to_string()]);
    }

    Ok(Report {
        command: "genfunc",
        parameters: vec![
            ("family", family.to_string()),
            ("h", height.to_string()),
            ("terms", terms.to_string()),
        ],
        result: json!({
            "numerator": numerator,
            "denominator_factors": factors,
            "coefficients": strings(&coefficients),
        }),
        pretty,
        csv,
    })
}

pub fn asymptotic(family: Family, height: i64) -> Result<Report, CliError> {
    let profile = asymptotic_profile(&mut Counter::new(), family, height)?;
    let fields: Vec<(&str, String)> = vec![
        ("family", family.to_string()),
        ("h", height.to_string()),
        ("alpha", profile.alpha.to_string()),
        ("beta", profile.beta.to_string()),
        ("parity_form", profile.parity_form.to_string()),
        ("period", profile.period.to_string()),
        ("residual", joined(&profile.residual)),
    ];
    let pretty: String = fields.iter().map(|(k, v)| format!("{k}: {v}\n")).collect();
    let csv = vec![
        fields.iter().map(|(k, _)| k.to_string()).collect(),
        fields.iter().map(|(_, v)| v.clone()).collect(),
    ];
    Ok(Report {
        command: "asymptotic",
        parameters: vec![("family", family.to_string()), ("h", height.to_string())],
        result: json!({
            "alpha": profile.alpha.to_string(),
            "beta": profile.beta.to_string(),
            "parity_form": profile.parity_form,
            "period": profile.period.to_string(),
            "residual": strings(&profile.residual),
        }),
        pretty,
        csv,
    })
}

/// Runs every self-check suite. The report is returned even on failure so
/// the caller can print it before exiting with the inconsistency code.
pub fn verify(config: VerifyConfig) -> (Report, bool) {
    let outcome = verify::run(&config);
    let status = |s: &SuiteStatus| match s {
        SuiteStatus::Passed => "pass",
        SuiteStatus::Failed(_) => "fail",
        SuiteStatus::Skipped(_) => "skip",
    };
    let detail = |s: &SuiteStatus| match s {
        SuiteStatus::Passed => String::new(),
        SuiteStatus::Failed(d) | SuiteStatus::Skipped(d) => d.clone(),
    };

    let mut pretty: String = outcome.suites.iter().map(|s| format!("{s}\n")).collect();
    let all_passed = outcome.all_passed();
    pretty.push_str(if all_passed {
        "all suites passed\n"
    } else {
        "verification FAILED\n"
    });

    let mut csv = vec![strings(&["suite", "status", "checks", "detail"])];
    csv.extend(outcome.suites.iter().map(|s| {
        vec![
            s.name.to_string(),
            status(&s.status).to_string(),
            s.checks.to_string(),
            detail(&s.status),
        ]
    }));

    let suites: Vec<Value> = outcome
        .suites
        .iter()
        .map(|s| {
            json!({
                "suite": s.name,
                "status": status(&s.status),
                "checks": s.checks.to_string(),
                "detail": detail(&s.status),
            })
        })
        .collect();

    let report = Report {
        command: "verify",
        parameters: vec![
            ("max_L", config.max_len.to_string()),
            ("brute_max", config.brute_max.to_string()),
            ("h_max", config.h_max.to_string()),
        ],
        result: json!({ "suites": suites, "all_passed": all_passed }),
        pretty,
        csv,
    };
    (report, all_passed)
}
