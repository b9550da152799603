# matrix_group module
