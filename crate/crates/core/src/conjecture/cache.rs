use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::arith::BivariatePolynomial;
use crate::error::{Error, Result};

pub const CACHE_VERSION: u64 = 1;

/// Computed terms of `o_n` and `o_n(k,t)`, persisted as
/// `{version, int: {n: "decimal"}, poly: {n: term-list}}`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Cache {
    path: Option<PathBuf>,
    int: BTreeMap<usize, BigInt>,
    poly: BTreeMap<usize, BivariatePolynomial>,
}

impl Cache {
    /// Empty, not backed by a file.
    pub fn in_memory() -> Self {
        Self::default()
    }

    /// `$PFTIL_CACHE`, else `$XDG_CACHE_HOME/pftil/cache.json`, else
    /// `$HOME/.cache/pftil/cache.json`.
    pub fn default_path() -> PathBuf {
        if let Some(p) = std::env::var_os("PFTIL_CACHE").filter(|p| !p.is_empty()) {
            return PathBuf::from(p);
        }
        let base = std::env::var_os("XDG_CACHE_HOME")
            .filter(|p| !p.is_empty())
            .map(PathBuf::from)
            .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))
            .unwrap_or_else(std::env::temp_dir);
        base.join("pftil").join("cache.json")
    }

    /// Reads `path`; a missing file or one written by another version gives
    /// an empty cache bound to `path`.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let mut cache = Cache {
            path: Some(path.to_path_buf()),
            ..Self::default()
        };
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(cache),
            Err(e) => return Err(e.into()),
        };
        let v: Value = serde_json::from_str(&text)?;
        if v.get("version").and_then(Value::as_u64) != Some(CACHE_VERSION) {
            return Ok(cache);
        }
        let bad = |what: &str| Error::Parse(format!("cache {}: bad {what}", path.display()));
        if let Some(obj) = v.get("int").and_then(Value::as_object) {
            for (k, val) in obj {
                let n: usize = k.parse().map_err(|_| bad("index"))?;
                let x: BigInt = val
                    .as_str()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| bad("integer"))?;
                cache.int.insert(n, x);
            }
        }
        if let Some(obj) = v.get("poly").and_then(Value::as_object) {
            for (k, val) in obj {
                let n: usize = k.parse().map_err(|_| bad("index"))?;
                cache.poly.insert(n, BivariatePolynomial::from_json(val)?);
            }
        }
        Ok(cache)
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    /// Writes to the bound path (no-op for an in-memory cache).
    pub fn save(&self) -> Result<()> {
        let Some(path) = &self.path else {
            return Ok(());
        };
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir)?;
        }
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, serde_json::to_string_pretty(&self.to_json())?)?;
        fs::rename(&tmp, path)?;
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let int: Map<String, Value> = self
            .int
            .iter()
            .map(|(n, v)| (n.to_string(), Value::String(v.to_string())))
            .collect();
        let poly: Map<String, Value> = self
            .poly
            .iter()
            .map(|(n, p)| (n.to_string(), p.to_json()))
            .collect();
        json!({ "version": CACHE_VERSION, "int": int, "poly": poly })
    }

    pub fn int(&self, n: usize) -> Option<&BigInt> {
        self.int.get(&n)
    }

    pub fn poly(&self, n: usize) -> Option<&BivariatePolynomial> {
        self.poly.get(&n)
    }

    pub fn set_int(&mut self, n: usize, v: BigInt) {
        self.int.insert(n, v);
    }

    pub fn set_poly(&mut self, n: usize, v: BivariatePolynomial) {
        self.poly.insert(n, v);
    }

    /// Largest `N` with `o_2, ..., o_N` all present.
    pub fn int_extent(&self) -> usize {
        (2..)
            .take_while(|n| self.int.contains_key(n))
            .last()
            .unwrap_or(1)
    }

    pub fn poly_extent(&self) -> usize {
        (2..)
            .take_while(|n| self.poly.contains_key(n))
            .last()
            .unwrap_or(1)
    }

    pub fn clear(&mut self) {
        self.int.clear();
        self.poly.clear();
    }
}
