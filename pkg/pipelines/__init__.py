# benchmark harness, algorithm registry and results store
