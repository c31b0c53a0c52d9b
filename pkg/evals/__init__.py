# This can be left empty
