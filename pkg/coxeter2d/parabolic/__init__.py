# parabolic module
