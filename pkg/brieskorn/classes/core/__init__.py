# Brieskorn Core Classes Module
