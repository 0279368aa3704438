# pcube - structure theory and census tooling for partial cubes
