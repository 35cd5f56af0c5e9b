# Tools modules
