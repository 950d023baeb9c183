namespace ich {}
