use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, RwLock};

/// Thread-safe memo table. Concurrent readers share a read lock; a miss
/// computes outside the lock and the first finished fill wins, so fills are
/// idempotent.
#[derive(Debug)]
pub struct Memo<K, V> {
    map: RwLock<HashMap<K, Arc<V>>>,
}

impl<K, V> Default for Memo<K, V> {
    fn default() -> Self {
        Memo { map: RwLock::new(HashMap::new()) }
    }
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, key: &K) -> Option<Arc<V>> {
        self.map.read().expect("memo lock poisoned").get(key).cloned()
    }

    pub fn get_or_insert_with(&self, key: &K, fill: impl FnOnce() -> V) -> Arc<V> {
        if let Some(v) = self.get(key) {
            return v;
        }
        let value = Arc::new(fill());
        let mut map = self.map.write().expect("memo lock poisoned");
        map.entry(key.clone()).or_insert(value).clone()
    }

    pub fn try_get_or_insert_with<E>(&self, key: &K, fill: impl FnOnce() -> Result<V, E>) -> Result<Arc<V>, E> {
        if let Some(v) = self.get(key) {
            return Ok(v);
        }
        let value = Arc::new(fill()?);
        let mut map = self.map.write().expect("memo lock poisoned");
        Ok(map.entry(key.clone()).or_insert(value).clone())
    }

    pub fn len(&self) -> usize {
        self.map.read().expect("memo lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
