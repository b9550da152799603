# fp_group module
