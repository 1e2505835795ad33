"""Free products of categories, enriched graphs and monad algebras."""
