use crate::error::Result;
use crate::fan::Fan;
use crate::grading::{ClassGroup, DivisorClass, Positivity};
use crate::poly::GradedPolynomial;
use crate::ring::CoxRing;
use std::sync::Arc;

/// A fan together with its Cox ring.
#[derive(Debug, Clone)]
pub struct ToricVariety {
    fan: Fan,
    ring: Arc<CoxRing>,
}

impl ToricVariety {
    pub fn new(fan: Fan) -> Result<ToricVariety> {
        let ring = CoxRing::from_fan(&fan)?;
        Ok(ToricVariety { fan, ring })
    }

    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn ring(&self) -> &Arc<CoxRing> {
        &self.ring
    }

    pub fn class_group(&self) -> &ClassGroup {
        self.ring.class_group()
    }

    pub fn dim(&self) -> usize {
        self.fan.dim()
    }

    pub fn positivity(&self, alpha: &DivisorClass) -> Result<Positivity> {
        self.class_group().positivity(&self.fan, alpha)
    }

    pub fn parse(&self, text: &str) -> Result<GradedPolynomial> {
        GradedPolynomial::parse(&self.ring, text)
    }
}
