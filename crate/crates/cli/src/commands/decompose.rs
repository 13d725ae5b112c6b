use serde::Serialize;

use jones_genus2::filtration::CaseTag;
use jones_genus2::reptheory::{
    decompose_with_table, weyl_dim_c2, CharacterTable, ConjugationModule, Decomposition, Partition,
    SymmetricAction,
};

use crate::args::DecomposeArgs;
use crate::commands::chartable;
use crate::output::{emit, Failure, Header};
use crate::repsource::resolve_rep;

/// Expected S_6 constituents of M(5, Q) with their multiplicities.
const EXPECTED_MULTIPLICITIES: [(&str, u64); 4] =
    [("[6]", 1), ("[4,2]", 1), ("[2^3]", 1), ("[3,1^3]", 1)];

/// Expected Sp(4) constituents `Γ_{a,b}` and their dimensions.
const EXPECTED_SP: [((u64, u64), u64); 3] = [((0, 0), 1), ((2, 0), 10), ((0, 2), 14)];

const GROUP_ORDER: usize = 720;

#[derive(Serialize)]
struct DecomposeDoc {
    header: Header,
    character_table_orthogonal: bool,
    cases: Vec<CaseDoc>,
    sp: SpDoc,
    diffs: Vec<String>,
    status: &'static str,
}

#[derive(Serialize)]
struct CaseDoc {
    case: CaseTag,
    degree0_group_order: Option<usize>,
    decomposition: Decomposition,
}

#[derive(Serialize)]
struct SpDoc {
    components: Vec<SpComponent>,
    sum: u64,
    expected_sum: u64,
    /// `dim Γ_{0,1}`, compared with the representation dimension.
    standard_dim: u64,
}

#[derive(Serialize)]
struct SpComponent {
    weight: (u64, u64),
    dim: u64,
    expected: u64,
}

/// The S_6 table with the identity-column entry of `[4,2]` bumped by one.
fn corrupted(table: &CharacterTable) -> CharacterTable {
    let lambda: Partition = "[4,2]".parse().expect("valid partition");
    let identity: Partition = "[1^6]".parse().expect("valid partition");
    let row = table
        .irreps()
        .iter()
        .position(|p| *p == lambda)
        .expect("[4,2] is an irreducible");
    let col = table
        .classes()
        .iter()
        .position(|(mu, _)| *mu == identity)
        .expect("identity class");
    let mut values = table.values().to_vec();
    values[row][col] += 1;
    CharacterTable::from_values(table.degree(), values)
}

fn check_case(case: CaseTag, order: Option<usize>, dec: &Decomposition, diffs: &mut Vec<String>) {
    if order != Some(GROUP_ORDER) {
        diffs.push(format!(
            "{case}: degree-0 group order expected {GROUP_ORDER}, got {order:?}"
        ));
    }
    for e in &dec.entries {
        let label = &e.partition;
        let expected = EXPECTED_MULTIPLICITIES
            .iter()
            .find(|(p, _)| p == label)
            .map_or(0, |(_, m)| *m);
        let expected_mult = format!("{expected}/1");
        if e.multiplicity != expected_mult {
            diffs.push(format!(
                "{case}: multiplicity of {label}: expected {expected_mult}, got {}",
                e.multiplicity
            ));
        }
        let expected_rank = expected as usize * e.irrep_dim.max(0) as usize;
        if e.projector_rank != expected_rank {
            diffs.push(format!(
                "{case}: projector rank of {label}: expected {expected_rank}, got {}",
                e.projector_rank
            ));
        }
    }
    let expected_sum = format!("{}/1", dec.module_dim);
    if dec.dimension_sum != expected_sum {
        diffs.push(format!(
            "{case}: dimension sum expected {expected_sum}, got {}",
            dec.dimension_sum
        ));
    }
    if !dec.projectors_sum_to_identity {
        diffs.push(format!("{case}: projectors do not sum to the identity"));
    }
}

pub fn run(args: &DecomposeArgs) -> Result<(), Failure> {
    let common = &args.common;
    if args.chartable_only {
        return chartable::run(common);
    }
    let (rep, info) = resolve_rep(common)?;
    let mut table = CharacterTable::s6();
    if args.corrupt_chartable {
        table = corrupted(&table);
    }
    let mut diffs = Vec::new();
    let table_ok = table.rows_orthogonal() && table.columns_orthogonal();
    if !table_ok {
        diffs.push("character table fails orthogonality".to_string());
    }

    let mut cases = Vec::new();
    for case in common.case.cases() {
        let action = SymmetricAction::from_rep(&rep, case.sign())
            .map_err(|e| Failure::Check(format!("{case}: {e}")))?;
        let order = action.closure_order(1000);
        let module =
            ConjugationModule::new(&action).map_err(|e| Failure::Check(format!("{case}: {e}")))?;
        let decomposition = decompose_with_table(&module, &table);
        check_case(case, order, &decomposition, &mut diffs);
        cases.push(CaseDoc {
            case,
            degree0_group_order: order,
            decomposition,
        });
    }
    if let [a, b] = cases.as_slice() {
        if a.decomposition != b.decomposition {
            diffs.push("decompositions differ between the two cases".to_string());
        }
    }

    let components: Vec<SpComponent> = EXPECTED_SP
        .iter()
        .map(|&((a, b), expected)| SpComponent {
            weight: (a, b),
            dim: weyl_dim_c2(a, b),
            expected,
        })
        .collect();
    for c in &components {
        if c.dim != c.expected {
            diffs.push(format!(
                "dim Γ_{:?}: expected {}, got {}",
                c.weight, c.expected, c.dim
            ));
        }
    }
    let sum = components.iter().map(|c| c.dim).sum();
    let expected_sum = (rep.dim() * rep.dim()) as u64;
    if sum != expected_sum {
        diffs.push(format!(
            "Sp(4) dimension sum: expected {expected_sum}, got {sum}"
        ));
    }
    let standard_dim = weyl_dim_c2(0, 1);
    if standard_dim != rep.dim() as u64 {
        diffs.push(format!(
            "dim Γ_(0, 1): expected {}, got {standard_dim}",
            rep.dim()
        ));
    }

    let mut text = String::new();
    for c in &cases {
        text.push_str(&format!(
            "case {}: degree-0 group order {}\n",
            c.case,
            c.degree0_group_order
                .map_or("> 1000".to_string(), |o| o.to_string())
        ));
        for e in c
            .decomposition
            .entries
            .iter()
            .filter(|e| e.multiplicity != "0/1" || e.projector_rank > 0)
        {
            text.push_str(&format!(
                "  {:<10} multiplicity {:<6} dim {:<3} projector rank {}\n",
                e.partition, e.multiplicity, e.irrep_dim, e.projector_rank
            ));
        }
        text.push_str(&format!(
            "  dimension sum {}\n",
            c.decomposition.dimension_sum
        ));
    }
    let dims: Vec<String> = components.iter().map(|c| c.dim.to_string()).collect();
    text.push_str(&format!("Sp(4): {} = {sum}\n", dims.join(" + ")));
    for d in &diffs {
        text.push_str(&format!("DIFF {d}\n"));
    }
    text.push_str(if diffs.is_empty() { "PASS\n" } else { "FAIL\n" });

    let passed = diffs.is_empty();
    let n = diffs.len();
    let doc = DecomposeDoc {
        header: Header::new("decompose", common, info),
        character_table_orthogonal: table_ok,
        cases,
        sp: SpDoc {
            components,
            sum,
            expected_sum,
            standard_dim,
        },
        diffs,
        status: if passed { "PASS" } else { "FAIL" },
    };
    emit(common, &doc, &text)?;
    if passed {
        Ok(())
    } else {
        Err(Failure::Check(format!(
            "{n} differences from the expected decomposition"
        )))
    }
}
