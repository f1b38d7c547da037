use serde::{Deserialize, Deserializer, Serialize};
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Degree,
    Reduce,
    Symbol,
    Density,
    Charsum,
    Check,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Degree => "degree",
            Command::Reduce => "reduce",
            Command::Symbol => "symbol",
            Command::Density => "density",
            Command::Charsum => "charsum",
            Command::Check => "check",
        }
    }
}

/// Fully resolved inputs of one run. Also the line format of batch mode.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub command: Command,
    pub l: u64,
    #[serde(default, deserialize_with = "de_int_list")]
    pub radicands: Vec<i128>,
    #[serde(default, deserialize_with = "de_opt_int_list")]
    pub targets: Option<Vec<i128>>,
    #[serde(default, deserialize_with = "de_opt_int")]
    pub norm_bound: Option<i128>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub output_format: OutputFormat,
    #[serde(default)]
    pub threads: Option<usize>,
    #[serde(default)]
    pub oracle: bool,
    /// `symbol`: the rational prime below the ideals.
    #[serde(default, deserialize_with = "de_opt_int")]
    pub p: Option<i128>,
    /// `symbol`: one ideal index, or all ideals when absent.
    #[serde(default)]
    pub ideal: Option<usize>,
    /// `charsum`: the integer whose symbols are summed.
    #[serde(default, deserialize_with = "de_opt_int")]
    pub n: Option<i128>,
}

impl RunConfig {
    /// The config as echoed in reports. `threads` is left out because it
    /// never changes a result.
    pub fn echo(&self) -> Value {
        let ints = |v: &[i128]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        let mut out = json!({
            "command": self.command.name(),
            "l": self.l.to_string(),
            "radicands": ints(&self.radicands),
            "targets": self.targets.as_deref().map(ints),
            "norm_bound": self.norm_bound.map(|x| x.to_string()),
            "seed": self.seed.to_string(),
            "output_format": self.output_format,
            "oracle": self.oracle,
        });
        let map = out.as_object_mut().unwrap();
        match self.command {
            Command::Symbol => {
                map.insert("p".into(), json!(self.p.map(|p| p.to_string())));
                map.insert("ideal".into(), json!(self.ideal.map_or("all".to_string(), |i| i.to_string())));
            }
            Command::Charsum => {
                map.insert("n".into(), json!(self.n.map(|n| n.to_string())));
            }
            _ => {}
        }
        out
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum IntRepr {
    Num(i64),
    Str(String),
}

impl IntRepr {
    fn into_i128<E: serde::de::Error>(self) -> Result<i128, E> {
        match self {
            IntRepr::Num(n) => Ok(n as i128),
            IntRepr::Str(s) => s
                .trim()
                .parse()
                .map_err(|_| E::custom(format!("invalid integer {s:?}"))),
        }
    }
}

fn de_int_list<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<i128>, D::Error> {
    Vec::<IntRepr>::deserialize(d)?
        .into_iter()
        .map(IntRepr::into_i128)
        .collect()
}

fn de_opt_int_list<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Vec<i128>>, D::Error> {
    Option::<Vec<IntRepr>>::deserialize(d)?
        .map(|v| v.into_iter().map(IntRepr::into_i128).collect())
        .transpose()
}

fn de_opt_int<'de, D: Deserializer<'de>>(d: D) -> Result<Option<i128>, D::Error> {
    Option::<IntRepr>::deserialize(d)?
        .map(IntRepr::into_i128)
        .transpose()
}
