# Agent modules
