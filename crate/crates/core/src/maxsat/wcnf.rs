use std::io::{self, Write};

use super::WcnfInstance;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum WcnfDialect {
    /// `h <lits> 0` for hard clauses, `<weight> <lits> 0` for soft ones.
    #[default]
    Modern,
    /// `p wcnf <vars> <clauses> <top>` header, hard clauses weighted `top`.
    Legacy,
}

/// Writes `instance` in WCNF. Hard clauses come first in generation order,
/// then soft clauses in order.
pub fn write_wcnf<W: Write>(instance: &WcnfInstance, dialect: WcnfDialect, mut sink: W) -> io::Result<()> {
    let hard_prefix = match dialect {
        WcnfDialect::Modern => "h".to_owned(),
        WcnfDialect::Legacy => {
            let top = instance.top_weight();
            writeln!(
                sink,
                "p wcnf {} {} {}",
                instance.num_vars,
                instance.hard.len() + instance.soft.len(),
                top
            )?;
            top.to_string()
        }
    };
    for clause in &instance.hard {
        write!(sink, "{hard_prefix}")?;
        for lit in clause {
            write!(sink, " {lit}")?;
        }
        writeln!(sink, " 0")?;
    }
    for (weight, clause) in &instance.soft {
        write!(sink, "{weight}")?;
        for lit in clause {
            write!(sink, " {lit}")?;
        }
        writeln!(sink, " 0")?;
    }
    sink.flush()
}

pub fn wcnf_string(instance: &WcnfInstance, dialect: WcnfDialect) -> String {
    let mut buf = Vec::new();
    write_wcnf(instance, dialect, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("ascii output")
}
