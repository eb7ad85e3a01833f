# Brieskorn d-invariant Methods Module
