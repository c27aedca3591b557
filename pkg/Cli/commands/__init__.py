# Cli commands package
