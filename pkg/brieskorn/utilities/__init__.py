# Brieskorn Utilities Module
