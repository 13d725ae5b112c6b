use serde::Serialize;

use jones_genus2::jones::syt_count;
use jones_genus2::reptheory::{CharacterTable, CharacterTableDoc, Partition};

use crate::args::Common;
use crate::output::{emit, Failure};

#[derive(Serialize)]
struct ChartableDoc {
    tool: &'static str,
    version: &'static str,
    table: CharacterTableDoc,
    /// Identity column agrees with standard Young tableau counts.
    dimensions_match_tableaux: bool,
    status: &'static str,
}

pub fn run(common: &Common) -> Result<(), Failure> {
    let table = CharacterTable::s6();
    let identity = Partition::new(vec![1; 6]);
    let dims_ok = table
        .irreps()
        .iter()
        .all(|l| table.value(l, &identity) == Some(syt_count(l) as i64));
    let passed = dims_ok && table.rows_orthogonal() && table.columns_orthogonal();
    let doc = ChartableDoc {
        tool: env!("CARGO_PKG_NAME"),
        version: env!("CARGO_PKG_VERSION"),
        table: table.export(),
        dimensions_match_tableaux: dims_ok,
        status: if passed { "PASS" } else { "FAIL" },
    };
    let mut text = table.render();
    text.push_str(&format!(
        "rows orthogonal {}  columns orthogonal {}  dimensions match tableaux {}\n",
        doc.table.rows_orthogonal, doc.table.columns_orthogonal, dims_ok
    ));
    text.push_str(&format!("{}\n", doc.status));
    emit(common, &doc, &text)?;
    if passed {
        Ok(())
    } else {
        Err(Failure::Check("character table checks failed".into()))
    }
}
