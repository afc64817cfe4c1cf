# Scoring Games Modules
