use std::fmt;

/// An indexed variable, printed `v1`, `v2`, ... Indices are unique within a
/// proof problem.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Variable(u32);

impl Variable {
    pub fn new(index: u32) -> Self {
        assert!(index > 0, "variable indices start at 1");
        Variable(index)
    }

    pub fn index(&self) -> u32 {
        self.0
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

/// Role of a variable in a proof problem. Immutable after allocation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VarRole {
    /// Coordinate of a free (draggable) point.
    Free,
    /// Coordinate of a constrained point.
    Dependent,
    /// Translator-introduced helper: lengths, touch points, radicals,
    /// denial variables.
    Auxiliary,
}

/// Monotone variable allocator; index n corresponds to `roles[n-1]`.
#[derive(Clone, Debug, Default)]
pub struct VarPool {
    roles: Vec<VarRole>,
}

impl VarPool {
    pub fn new() -> Self {
        VarPool { roles: Vec::new() }
    }

    pub fn fresh(&mut self, role: VarRole) -> Variable {
        self.roles.push(role);
        Variable::new(self.roles.len() as u32)
    }

    pub fn fresh_pair(&mut self, role: VarRole) -> (Variable, Variable) {
        (self.fresh(role), self.fresh(role))
    }

    pub fn role(&self, v: Variable) -> VarRole {
        self.roles[(v.index() - 1) as usize]
    }

    pub fn len(&self) -> usize {
        self.roles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roles.is_empty()
    }

    pub fn vars_with_role(&self, role: VarRole) -> Vec<Variable> {
        (1..=self.roles.len() as u32)
            .map(Variable::new)
            .filter(|v| self.role(*v) == role)
            .collect()
    }
}
