# Buckfire - Test Suite
