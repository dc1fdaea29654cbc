//! Bundled character table files for groups that are too large to
//! enumerate element by element. Each file passes the same gate as a
//! computed table, so nothing here is taken on faith.

use super::table::{CharTable, TableError};

const BUNDLED_TABLES: &[(&str, &str)] =
    &[("2a7", include_str!("../../data/ctab/2a7.ctab"))];

pub fn bundled_table_source(key: &str) -> Option<&'static str> {
    BUNDLED_TABLES.iter().find(|(k, _)| *k == key).map(|(_, s)| *s)
}

pub fn load_bundled_table(key: &str) -> Result<CharTable, TableError> {
    let src = bundled_table_source(key)
        .ok_or_else(|| TableError::Violation(format!("no bundled table named '{}'", key)))?;
    CharTable::from_ctab(src)
}
