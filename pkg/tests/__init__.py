# Brieskorn Tests Module
