// transpiler (in progress)
