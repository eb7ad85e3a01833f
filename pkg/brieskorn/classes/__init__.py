# Brieskorn Classes Module
