# Engine package
