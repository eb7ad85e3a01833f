# Brieskorn sphere invariants and Weinstein-domain obstructions
