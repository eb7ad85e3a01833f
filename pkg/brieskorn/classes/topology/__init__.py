# Brieskorn Topology Classes Module
