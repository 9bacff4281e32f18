//! Shipped recipe configurations, embedded at compile time.

pub struct Recipe {
    pub name: &'static str,
    pub description: &'static str,
    pub toml: &'static str,
}

pub const RECIPES: &[Recipe] = &[
    Recipe {
        name: "fig2a",
        description: "sweep: heat components vs detuning at fixed g = g*(20·gamma)",
        toml: include_str!("../recipes/fig2a.toml"),
    },
    Recipe {
        name: "fig2b",
        description: "sweep: hot/cold heat and drive power vs detuning at g = g*(0)",
        toml: include_str!("../recipes/fig2b.toml"),
    },
    Recipe {
        name: "fig2c",
        description: "sweep: hot-bath heat along the cancellation line (g*(delta), delta)",
        toml: include_str!("../recipes/fig2c.toml"),
    },
    Recipe {
        name: "supplement_design_point",
        description: "point: charge-qubit design point on the cancellation line (~15 aW)",
        toml: include_str!("../recipes/supplement_design_point.toml"),
    },
];

pub fn find(name: &str) -> Option<&'static Recipe> {
    RECIPES.iter().find(|r| r.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::validate_config;

    #[test]
    fn every_recipe_parses_cleanly() {
        for recipe in RECIPES {
            let cfg = validate_config(recipe.toml)
                .unwrap_or_else(|e| panic!("recipe {} invalid: {e}", recipe.name));
            assert!(cfg.warnings.is_empty(), "recipe {} warns", recipe.name);
        }
    }

    #[test]
    fn fig2a_drive_matches_cancellation_strength_at_20_gamma() {
        let cfg = validate_config(find("fig2a").unwrap().toml).unwrap();
        let expected = qheat_core::g_star(&cfg.hot, &cfg.cold, 20.0 * 2.7e9).unwrap();
        match cfg.g_rule {
            crate::config::GRule::Fixed(g) => {
                assert!(
                    (g - expected).abs() <= 1e-12 * expected,
                    "{g:e} vs {expected:e}"
                )
            }
            other => panic!("fig2a should fix g, got {other:?}"),
        }
    }

    #[test]
    fn lookup_by_name() {
        assert!(find("fig2c").is_some());
        assert!(find("nope").is_none());
    }
}
