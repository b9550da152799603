# coxeter module
