/// Size limits applied when enumerating groups and subgroup lattices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Maximum number of group elements.
    pub order: usize,
    /// Maximum permutation degree accepted from user-supplied generators.
    pub degree: usize,
    /// Maximum number of subgroups produced by a lattice enumeration.
    pub subgroups: usize,
}

pub const ORDER_CAP_ENV: &str = "OORTSCAN_CAP";

impl Default for Caps {
    fn default() -> Self {
        Caps {
            order: 4096,
            degree: 64,
            subgroups: 200_000,
        }
    }
}

impl Caps {
    /// Default caps, with the order cap taken from `OORTSCAN_CAP` when set.
    pub fn from_env() -> Self {
        let mut caps = Caps::default();
        if let Some(order) = std::env::var(ORDER_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
        {
            caps.order = order.clamp(1, u16::MAX as usize);
        }
        caps
    }

    pub fn with_order(mut self, order: usize) -> Self {
        self.order = order;
        self
    }
}
