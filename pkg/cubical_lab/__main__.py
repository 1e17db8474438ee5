from cubical_lab.main import main

main()
