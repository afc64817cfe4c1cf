# Notation and Command Handlers
