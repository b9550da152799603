# gf2 module
