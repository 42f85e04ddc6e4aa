from heawood.cli import main

main()
