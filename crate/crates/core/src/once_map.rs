use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, RwLock};

use crate::error::Result;

/// Write-once-per-key cache that is safe under concurrent readers.
///
/// Two threads may race to compute the same key; the first insertion wins and
/// every caller observes that value.
pub(crate) struct OnceMap<K, V> {
    inner: RwLock<HashMap<K, Arc<V>>>,
}

impl<K: Eq + Hash + Clone, V> OnceMap<K, V> {
    pub fn new() -> Self {
        OnceMap {
            inner: RwLock::new(HashMap::new()),
        }
    }

    pub fn get_or_try_init(&self, key: &K, init: impl FnOnce() -> Result<V>) -> Result<Arc<V>> {
        if let Some(v) = self.inner.read().expect("cache lock poisoned").get(key) {
            return Ok(Arc::clone(v));
        }
        let value = Arc::new(init()?);
        let mut w = self.inner.write().expect("cache lock poisoned");
        Ok(Arc::clone(w.entry(key.clone()).or_insert(value)))
    }
}

impl<K, V> std::fmt::Debug for OnceMap<K, V> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("OnceMap")
    }
}
