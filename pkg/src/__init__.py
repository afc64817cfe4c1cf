# Scoring Games Source Package
