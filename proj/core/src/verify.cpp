// verifier (in progress)
