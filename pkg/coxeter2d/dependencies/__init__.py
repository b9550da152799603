# dependencies module
