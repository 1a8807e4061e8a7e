use serde::Serialize;

/// Three-valued outcome of a one-sided certificate check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    Holds,
    Fails,
    Unknown,
}

impl Verdict {
    /// `Fails` if anything fails, else `Unknown` if anything is unknown,
    /// else `Holds`. The empty conjunction holds.
    pub fn all<I: IntoIterator<Item = Verdict>>(verdicts: I) -> Verdict {
        let mut out = Verdict::Holds;
        for v in verdicts {
            match v {
                Verdict::Fails => return Verdict::Fails,
                Verdict::Unknown => out = Verdict::Unknown,
                Verdict::Holds => {}
            }
        }
        out
    }

    pub fn from_bool(holds: bool) -> Verdict {
        if holds {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }

    /// CLI exit code: 0, 1, 2.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Holds => 0,
            Verdict::Fails => 1,
            Verdict::Unknown => 2,
        }
    }
}
