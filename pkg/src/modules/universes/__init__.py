# Universe Predicates and Enumeration
