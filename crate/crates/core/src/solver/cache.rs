use std::collections::HashMap;
use std::io::{BufRead, Write};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use dashmap::DashMap;
use parking_lot::RwLock;

use super::ConwayPair;
use crate::error::{Error, Result};
use crate::moveset::Moveset;
use crate::partition::Partition;

pub(crate) type Table = DashMap<Partition, ConwayPair>;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CacheStats {
    pub hits: u64,
    pub entries: usize,
}

/// Shared memo of Conway pairs keyed by moveset and position.
///
/// Entries are write-once in effect: two threads racing on the same key
/// compute the same canonical value, so a duplicate insert is harmless.
#[derive(Default)]
pub struct SgCache {
    tables: RwLock<HashMap<Moveset, Arc<Table>>>,
    hits: AtomicU64,
}

impl SgCache {
    pub fn new() -> Self {
        SgCache::default()
    }

    pub(crate) fn table(&self, moveset: &Moveset) -> Arc<Table> {
        if let Some(t) = self.tables.read().get(moveset) {
            return Arc::clone(t);
        }
        Arc::clone(self.tables.write().entry(moveset.clone()).or_default())
    }

    pub(crate) fn record_hit(&self) {
        self.hits.fetch_add(1, Ordering::Relaxed);
    }

    pub fn get(&self, moveset: &Moveset, lam: &Partition) -> Option<ConwayPair> {
        self.tables.read().get(moveset)?.get(lam).map(|r| *r)
    }

    pub fn stats(&self) -> CacheStats {
        CacheStats {
            hits: self.hits.load(Ordering::Relaxed),
            entries: self.tables.read().values().map(|t| t.len()).sum(),
        }
    }

    /// Writes one tab-separated record per entry:
    /// `moveset<TAB>partition<TAB>normal<TAB>misere`, sorted by moveset literal
    /// and then graded partition order.
    pub fn export<W: Write>(&self, mut out: W) -> std::io::Result<usize> {
        let tables = self.tables.read();
        let mut keyed: Vec<(String, &Arc<Table>)> =
            tables.iter().map(|(m, t)| (m.literal(), t)).collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        let mut written = 0;
        for (literal, table) in keyed {
            let mut rows: Vec<(Partition, ConwayPair)> =
                table.iter().map(|e| (e.key().clone(), *e.value())).collect();
            rows.sort_by(|a, b| a.0.graded_cmp(&b.0));
            for (lam, pair) in rows {
                writeln!(out, "{literal}\t{lam}\t{}\t{}", pair.normal, pair.misere)?;
                written += 1;
            }
        }
        Ok(written)
    }

    /// Loads records written by [`export`](Self::export). Existing entries win.
    pub fn import<R: BufRead>(&self, input: R) -> Result<usize> {
        let mut loaded = 0;
        for (n, line) in input.lines().enumerate() {
            let line = line.map_err(|e| Error::invalid(format!("reading cache: {e}")))?;
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 4 {
                return Err(Error::parse(
                    line.clone(),
                    format!("cache line {} needs 4 tab-separated fields", n + 1),
                ));
            }
            let moveset: Moveset = fields[0].parse()?;
            let lam: Partition = fields[1].parse()?;
            if lam.is_empty() {
                return Err(Error::parse(fields[1], "cached positions are nonempty"));
            }
            let num = |t: &str| {
                t.parse::<u32>()
                    .map_err(|_| Error::parse(t, "expected a nonnegative integer"))
            };
            let pair = ConwayPair::new(num(fields[2])?, num(fields[3])?);
            self.table(&moveset).entry(lam).or_insert(pair);
            loaded += 1;
        }
        Ok(loaded)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moveset::PieceId;
    use crate::partition;
    use crate::solver::Solver;

    #[test]
    fn export_import_roundtrip() {
        let cache = Arc::new(SgCache::new());
        let king = Solver::with_cache(PieceId::King, Arc::clone(&cache));
        let custom = Solver::with_cache(
            "steps:(0,2);rays:(1,1)".parse::<Moveset>().unwrap(),
            Arc::clone(&cache),
        );
        king.pair(&partition![4, 3, 1]);
        custom.pair(&partition![5, 5, 2]);
        let mut buf = Vec::new();
        let written = cache.export(&mut buf).unwrap();
        assert_eq!(written, cache.stats().entries);

        let restored = SgCache::new();
        assert_eq!(restored.import(buf.as_slice()).unwrap(), written);
        let mut again = Vec::new();
        restored.export(&mut again).unwrap();
        assert_eq!(buf, again);
        assert_eq!(
            restored.get(&PieceId::King.moveset(), &partition![4, 3, 1]),
            Some(king.pair(&partition![4, 3, 1]))
        );
    }

    #[test]
    fn import_rejects_garbage() {
        let cache = SgCache::new();
        assert!(cache.import("king\t3,1\t1".as_bytes()).is_err());
        assert!(cache.import("king\t1,3\t1\t0".as_bytes()).is_err());
        assert!(cache.import("wizard\t3,1\t1\t0".as_bytes()).is_err());
    }
}
