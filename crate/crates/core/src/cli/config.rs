use std::path::{Path, PathBuf};

use serde::Serialize;

use super::args::CommonArgs;
use crate::eicat::{CategoryInstance, CategoryKind, FiniteGroupTable, Guard};
use crate::error::{Error, Result};
use crate::exactalg::is_prime;

pub const GUARD_ENV: &str = "EINL_GUARD";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "value")]
pub enum GammaSource {
    Cyclic(usize),
    Table(PathBuf),
}

impl GammaSource {
    pub fn parse(text: &str) -> Result<Self> {
        let bad = || Error::Precondition(format!("--gamma expects cyclic:<n> or table:<path>, got `{text}`"));
        match text.split_once(':') {
            Some(("cyclic", n)) => n.trim().parse().map(GammaSource::Cyclic).map_err(|_| bad()),
            Some(("table", p)) if !p.is_empty() => Ok(GammaSource::Table(PathBuf::from(p))),
            _ => Err(bad()),
        }
    }

    pub fn load(&self) -> Result<FiniteGroupTable> {
        match self {
            GammaSource::Cyclic(n) => FiniteGroupTable::cyclic(*n),
            GammaSource::Table(p) => FiniteGroupTable::load(p),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    #[default]
    Json,
    Table,
}

/// A fully resolved run configuration. Everything that affects the report
/// is echoed into it; `jobs`, `out` and `format` are not.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub category: CategoryKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<GammaSource>,
    pub i: Vec<usize>,
    pub max_object: usize,
    pub guard: Guard,
    pub audit: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub module: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generators: Option<PathBuf>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j0: Option<usize>,
    pub timings: bool,
    #[serde(skip)]
    pub jobs: Option<usize>,
    #[serde(skip)]
    pub out: Option<PathBuf>,
    #[serde(skip)]
    pub format: Format,
}

impl RunConfig {
    /// Merges flags over an optional key=value file over `EINL_GUARD` over defaults.
    pub fn resolve(flags: &CommonArgs) -> Result<Self> {
        let file = match &flags.config {
            Some(path) => parse_config_file(path)?,
            None => CommonArgs::default(),
        };
        Self::resolve_layers(flags, &file, std::env::var(GUARD_ENV).ok().as_deref())
    }

    pub fn resolve_layers(flags: &CommonArgs, file: &CommonArgs, env_guard: Option<&str>) -> Result<Self> {
        fn pick<T: Clone>(a: &Option<T>, b: &Option<T>) -> Option<T> {
            a.clone().or_else(|| b.clone())
        }
        let category = match pick(&flags.category, &file.category).as_deref().unwrap_or("fi_gamma") {
            "fi_gamma" | "fi" => CategoryKind::FiGamma,
            "vi" => CategoryKind::Vi,
            "vic" => CategoryKind::Vic,
            other => {
                return Err(Error::Precondition(format!(
                    "unknown category `{other}` (fi_gamma, vi, vic)"
                )))
            }
        };
        let (q, gamma) = match category {
            CategoryKind::FiGamma => {
                let g = match pick(&flags.gamma, &file.gamma) {
                    Some(text) => GammaSource::parse(&text)?,
                    None => GammaSource::Cyclic(1),
                };
                (None, Some(g))
            }
            _ => {
                let q = pick(&flags.q, &file.q).unwrap_or(2);
                if !is_prime(q as u64) {
                    return Err(Error::NotPrime(q as u64));
                }
                (Some(q), None)
            }
        };
        let max_object = pick(&flags.max_object, &file.max_object).unwrap_or(4);
        if max_object < 1 {
            return Err(Error::Precondition("--max-object must be at least 1".into()));
        }
        let mut i = pick(&flags.i, &file.i).unwrap_or_else(|| vec![1]);
        i.sort_unstable();
        i.dedup();
        if let Some(&bad) = i.iter().find(|&&i| i >= max_object) {
            return Err(Error::Precondition(format!("need i < J, got i={bad}, J={max_object}")));
        }
        let env_guard = match env_guard {
            Some(text) => Some(
                text.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Precondition(format!("{GUARD_ENV}={text} is not a count")))?,
            ),
            None => None,
        };
        // One number caps both hom-set and group enumeration when given.
        let guard = match pick(&flags.guard, &file.guard).or(env_guard) {
            Some(n) => Guard {
                max_hom_set: n,
                max_group: n,
            },
            None => Guard::default(),
        };
        let format = match pick(&flags.format, &file.format).as_deref().unwrap_or("json") {
            "json" => Format::Json,
            "table" => Format::Table,
            other => return Err(Error::Precondition(format!("unknown format `{other}` (json, table)"))),
        };
        let jobs = pick(&flags.jobs, &file.jobs);
        if jobs == Some(0) {
            return Err(Error::Precondition("--jobs must be at least 1".into()));
        }
        Ok(RunConfig {
            category,
            q,
            gamma,
            i,
            max_object,
            guard,
            audit: flags.audit || file.audit,
            module: pick(&flags.module, &file.module),
            generators: pick(&flags.generators, &file.generators),
            j0: pick(&flags.j0, &file.j0),
            timings: flags.timings || file.timings,
            jobs,
            out: pick(&flags.out, &file.out),
            format,
        })
    }

    pub fn category_instance(&self) -> Result<CategoryInstance> {
        let cat = match self.category {
            CategoryKind::FiGamma => {
                let g = self.gamma.as_ref().expect("resolved").load()?;
                CategoryInstance::fi_gamma(g, self.max_object)
            }
            CategoryKind::Vi => CategoryInstance::vi(self.q.expect("resolved"), self.max_object)?,
            CategoryKind::Vic => CategoryInstance::vic(self.q.expect("resolved"), self.max_object)?,
        };
        Ok(cat.with_guard(self.guard))
    }
}

pub fn parse_config_file(path: &Path) -> Result<CommonArgs> {
    parse_config(&std::fs::read_to_string(path)?)
}

/// Flat `key = value` lines; `#` starts a comment. Keys are the long flag
/// names, with `-` or `_`.
pub fn parse_config(text: &str) -> Result<CommonArgs> {
    let mut out = CommonArgs::default();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |message: String| Error::Parse { line, message };
        let (key, value) = content
            .split_once('=')
            .ok_or_else(|| err("expected `key = value`".into()))?;
        let key = key.trim().replace('_', "-");
        let value = value.trim().to_string();
        let num = |v: &str| v.parse::<usize>().map_err(|_| err(format!("`{key}` expects a number, got `{v}`")));
        let flag = |v: &str| match v {
            "true" | "yes" | "1" => Ok(true),
            "false" | "no" | "0" => Ok(false),
            _ => Err(err(format!("`{key}` expects true or false, got `{v}`"))),
        };
        match key.as_str() {
            "category" => out.category = Some(value),
            "q" => out.q = Some(num(&value)? as u32),
            "gamma" => out.gamma = Some(value),
            "i" => {
                out.i = Some(
                    value
                        .split(',')
                        .map(|t| num(t.trim()))
                        .collect::<Result<Vec<_>>>()?,
                )
            }
            "max-object" => out.max_object = Some(num(&value)?),
            "guard" => out.guard = Some(num(&value)?),
            "audit" => out.audit = flag(&value)?,
            "jobs" => out.jobs = Some(num(&value)?),
            "out" => out.out = Some(PathBuf::from(value)),
            "format" => out.format = Some(value),
            "module" => out.module = Some(value),
            "generators" => out.generators = Some(PathBuf::from(value)),
            "j0" => out.j0 = Some(num(&value)?),
            "timings" => out.timings = flag(&value)?,
            other => return Err(err(format!("unknown key `{other}`"))),
        }
    }
    Ok(out)
}
