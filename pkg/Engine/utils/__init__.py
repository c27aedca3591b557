# Engine utils package
