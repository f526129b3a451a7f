"""Power graphs of finite groups and their complements."""
