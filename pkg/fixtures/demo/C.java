class C { void m3() { } }
