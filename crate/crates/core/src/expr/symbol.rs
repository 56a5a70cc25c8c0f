use std::fmt;

use serde::{Serialize, Serializer};

/// Role a symbol plays in the algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymbolKind {
    Dynamic,
    Time,
    Parameter,
    Constant,
}

/// Inertial frame a dynamic symbol belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Frame {
    Unprimed,
    Primed,
}

impl Frame {
    pub fn position(self) -> Symbol {
        match self {
            Frame::Unprimed => Symbol::X,
            Frame::Primed => Symbol::Xp,
        }
    }

    pub fn velocity(self) -> Symbol {
        match self {
            Frame::Unprimed => Symbol::XDot,
            Frame::Primed => Symbol::XpDot,
        }
    }

    pub fn acceleration(self) -> Symbol {
        match self {
            Frame::Unprimed => Symbol::XDDot,
            Frame::Primed => Symbol::XpDDot,
        }
    }

    /// Position, velocity and acceleration, in that order.
    pub fn jet(self) -> [Symbol; 3] {
        [self.position(), self.velocity(), self.acceleration()]
    }

    pub fn other(self) -> Frame {
        match self {
            Frame::Unprimed => Frame::Primed,
            Frame::Primed => Frame::Unprimed,
        }
    }
}

impl fmt::Display for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Frame::Unprimed => f.write_str("unprimed"),
            Frame::Primed => f.write_str("primed"),
        }
    }
}

/// The fixed symbol table.
///
/// Declaration order is the monomial order: constants < parameters < t < x <
/// xdot < xddot < xp < xpdot < xpddot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    C0,
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    /// The constant value `C` taken by a gauge sum once it is forced to be constant.
    Cconst,
    V0,
    U0,
    X0,
    T,
    X,
    XDot,
    XDDot,
    Xp,
    XpDot,
    XpDDot,
}

impl Symbol {
    pub const COUNT: usize = 18;

    pub const ALL: [Symbol; Symbol::COUNT] = [
        Symbol::C0,
        Symbol::C1,
        Symbol::C2,
        Symbol::C3,
        Symbol::C4,
        Symbol::C5,
        Symbol::C6,
        Symbol::Cconst,
        Symbol::V0,
        Symbol::U0,
        Symbol::X0,
        Symbol::T,
        Symbol::X,
        Symbol::XDot,
        Symbol::XDDot,
        Symbol::Xp,
        Symbol::XpDot,
        Symbol::XpDDot,
    ];

    /// Order in which factors are written inside a printed monomial:
    /// constants, parameters, dynamic variables, then time (`C2*x*t`).
    pub(crate) const PRINT_ORDER: [Symbol; Symbol::COUNT] = [
        Symbol::C0,
        Symbol::C1,
        Symbol::C2,
        Symbol::C3,
        Symbol::C4,
        Symbol::C5,
        Symbol::C6,
        Symbol::Cconst,
        Symbol::V0,
        Symbol::U0,
        Symbol::X0,
        Symbol::X,
        Symbol::XDot,
        Symbol::XDDot,
        Symbol::Xp,
        Symbol::XpDot,
        Symbol::XpDDot,
        Symbol::T,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Symbol::C0 => "C0",
            Symbol::C1 => "C1",
            Symbol::C2 => "C2",
            Symbol::C3 => "C3",
            Symbol::C4 => "C4",
            Symbol::C5 => "C5",
            Symbol::C6 => "C6",
            Symbol::Cconst => "Cconst",
            Symbol::V0 => "v0",
            Symbol::U0 => "u0",
            Symbol::X0 => "x0",
            Symbol::T => "t",
            Symbol::X => "x",
            Symbol::XDot => "xdot",
            Symbol::XDDot => "xddot",
            Symbol::Xp => "xp",
            Symbol::XpDot => "xpdot",
            Symbol::XpDDot => "xpddot",
        }
    }

    pub fn from_name(name: &str) -> Option<Symbol> {
        Symbol::ALL.iter().copied().find(|s| s.name() == name)
    }

    pub fn kind(self) -> SymbolKind {
        use Symbol::*;
        match self {
            C0 | C1 | C2 | C3 | C4 | C5 | C6 | Cconst => SymbolKind::Constant,
            V0 | U0 | X0 => SymbolKind::Parameter,
            T => SymbolKind::Time,
            X | XDot | XDDot | Xp | XpDot | XpDDot => SymbolKind::Dynamic,
        }
    }

    pub fn is_constant(self) -> bool {
        self.kind() == SymbolKind::Constant
    }

    pub fn is_parameter(self) -> bool {
        self.kind() == SymbolKind::Parameter
    }

    /// Dynamic or time symbol, i.e. anything that varies along a trajectory.
    pub fn is_kinematic(self) -> bool {
        matches!(self.kind(), SymbolKind::Dynamic | SymbolKind::Time)
    }

    pub fn is_acceleration(self) -> bool {
        matches!(self, Symbol::XDDot | Symbol::XpDDot)
    }

    /// `C0` .. `C6` by index.
    pub fn constant(index: usize) -> Option<Symbol> {
        use Symbol::*;
        [C0, C1, C2, C3, C4, C5, C6].get(index).copied()
    }

    pub fn frame(self) -> Option<Frame> {
        match self {
            Symbol::X | Symbol::XDot | Symbol::XDDot => Some(Frame::Unprimed),
            Symbol::Xp | Symbol::XpDot | Symbol::XpDDot => Some(Frame::Primed),
            _ => None,
        }
    }

    /// The same dynamic quantity expressed in `frame`; other symbols map to themselves.
    pub fn in_frame(self, frame: Frame) -> Symbol {
        match (self, frame) {
            (Symbol::X | Symbol::Xp, f) => f.position(),
            (Symbol::XDot | Symbol::XpDot, f) => f.velocity(),
            (Symbol::XDDot | Symbol::XpDDot, f) => f.acceleration(),
            (s, _) => s,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for Symbol {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip_and_are_unique() {
        for s in Symbol::ALL {
            assert_eq!(Symbol::from_name(s.name()), Some(s));
        }
        assert_eq!(Symbol::from_name("y"), None);
        assert_eq!(Symbol::ALL.len(), Symbol::COUNT);
        for (i, s) in Symbol::ALL.iter().enumerate() {
            assert_eq!(s.index(), i);
        }
    }

    #[test]
    fn order_groups_constants_first() {
        assert!(Symbol::C6 < Symbol::V0);
        assert!(Symbol::X0 < Symbol::T);
        assert!(Symbol::T < Symbol::X);
        assert!(Symbol::XDDot < Symbol::Xp);
        assert_eq!(Symbol::C5.kind(), SymbolKind::Constant);
        assert_eq!(Symbol::U0.kind(), SymbolKind::Parameter);
        assert_eq!(Symbol::T.kind(), SymbolKind::Time);
        assert_eq!(Symbol::XpDot.kind(), SymbolKind::Dynamic);
    }

    #[test]
    fn frame_mapping() {
        assert_eq!(Symbol::XDot.in_frame(Frame::Primed), Symbol::XpDot);
        assert_eq!(Symbol::Xp.in_frame(Frame::Unprimed), Symbol::X);
        assert_eq!(Symbol::T.in_frame(Frame::Primed), Symbol::T);
        assert_eq!(Symbol::XpDDot.frame(), Some(Frame::Primed));
        assert_eq!(Symbol::C1.frame(), None);
    }
}
