use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::Serialize;
use sha2::{Digest, Sha256};

pub const ENV_VAR: &str = "HOLOCURV_CACHE";

/// Content-addressed store of computed spaces.
#[derive(Clone, Debug)]
pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn disabled() -> Self {
        Cache { dir: None }
    }

    pub fn at(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: Some(dir.into()) }
    }

    /// Environment variable, then the flag, then the user cache directory.
    pub fn resolve(flag: Option<&Path>, env: Option<String>) -> Self {
        if let Some(e) = env.filter(|e| !e.is_empty()) {
            return Cache::at(e);
        }
        if let Some(f) = flag {
            return Cache::at(f);
        }
        let base = std::env::var_os("XDG_CACHE_HOME")
            .map(PathBuf::from)
            .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")));
        match base {
            Some(b) => Cache::at(b.join("holocurv")),
            None => Cache::disabled(),
        }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn key(content: &str) -> String {
        hex::encode(Sha256::digest(content.as_bytes()))
    }

    fn path(&self, key: &str, kind: &str) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{key}.{kind}.json")))
    }

    pub fn load<T: DeserializeOwned>(&self, key: &str, kind: &str) -> Option<T> {
        let p = self.path(key, kind)?;
        let s = fs::read_to_string(p).ok()?;
        serde_json::from_str(&s).ok()
    }

    /// Best effort; a failed write only costs recomputation later.
    pub fn store<T: Serialize>(&self, key: &str, kind: &str, value: &T) {
        let Some(p) = self.path(key, kind) else { return };
        if let Some(d) = p.parent() {
            if fs::create_dir_all(d).is_err() {
                return;
            }
        }
        let Ok(s) = serde_json::to_string(value) else { return };
        let tmp = p.with_extension(format!("tmp{}", std::process::id()));
        if fs::write(&tmp, s).is_ok() {
            let _ = fs::rename(&tmp, &p);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn env_wins() {
        let c = Cache::resolve(Some(Path::new("/flag")), Some("/env".into()));
        assert_eq!(c.dir(), Some(Path::new("/env")));
        let c = Cache::resolve(Some(Path::new("/flag")), None);
        assert_eq!(c.dir(), Some(Path::new("/flag")));
    }

    #[test]
    fn round_trip() {
        let d = tempfile::tempdir().unwrap();
        let c = Cache::at(d.path());
        c.store("k", "x", &vec![1, 2, 3]);
        assert_eq!(c.load::<Vec<i32>>("k", "x"), Some(vec![1, 2, 3]));
        assert_eq!(c.load::<Vec<i32>>("k", "y"), None);
    }
}
